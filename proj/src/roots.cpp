#include "hyperlp/roots.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <utility>

#include "hyperlp/errors.hpp"

namespace hyperlp {

std::string to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::Hyperbolic: return "Hyperbolic";
    case Verdict::NotHyperbolic: return "NotHyperbolic";
    case Verdict::Undetermined: return "Undetermined";
  }
  return "?";
}

std::string to_string(RootSign sign) {
  switch (sign) {
    case RootSign::Any: return "Any";
    case RootSign::AllPositive: return "AllPositive";
    case RootSign::AllNegative: return "AllNegative";
  }
  return "?";
}

namespace {

// 0 means the sign is not decided by the enclosure.
int certain_sign(const Real& v) {
  if (v.is_positive()) return 1;
  if (v.is_negative()) return -1;
  return 0;
}

// Upper bound on the number of sign variations of any coefficient vector
// inside the given enclosures.  Coefficients whose enclosure contains zero
// may take either sign or vanish.
int max_sign_variations(const std::vector<Real>& coefficients) {
  constexpr int kNone = std::numeric_limits<int>::min() / 2;
  // Best variation count so far, keyed by the sign of the last nonzero entry.
  int start = 0, pos = kNone, neg = kNone;
  for (const Real& c : coefficients) {
    const int s = certain_sign(c);
    const bool may_vanish = s == 0;
    int next_start = may_vanish ? start : kNone;
    int next_pos = may_vanish ? pos : kNone;
    int next_neg = may_vanish ? neg : kNone;
    if (s >= 0) next_pos = std::max({next_pos, start, pos, neg + 1});
    if (s <= 0) next_neg = std::max({next_neg, start, neg, pos + 1});
    start = next_start;
    pos = next_pos;
    neg = next_neg;
  }
  return std::max({start, pos, neg, 0});
}

// Descartes bound for the number of roots in the open interval (a, b).
int descartes_bound(const IntervalPolynomial& p, const Real& a, const Real& b) {
  IntervalPolynomial r = p.taylor_shift(a).scale_argument(b - a);
  IntervalPolynomial q = r.reversed().taylor_shift(Real(1, p.precision()));
  return max_sign_variations(q.coefficients());
}

struct SourcedRoot {
  IsolatedRoot root;
  std::optional<IntervalPolynomial> source;  // empty for exact roots at 0
};

struct IsolationParts {
  std::vector<SourcedRoot> roots;
  std::vector<RootCluster> clusters;
};

// a + (b - a) * num / 16 at a fixed point precision; the caller checks that
// the result is exact.
Real split_point(const Real& a, const Real& b, int num, int prec) {
  Real aa = a.with_precision(prec), bb = b.with_precision(prec);
  return aa + mul_2exp((bb - aa) * Real(num, prec), -4);
}

// Candidate split fractions (in sixteenths), middle first.
constexpr std::array<int, 9> kSplitFractions{8, 7, 9, 6, 10, 5, 11, 4, 12};

std::optional<std::pair<Real, int>> signed_split_point(const IntervalPolynomial& p, const Real& a, const Real& b) {
  const int prec = p.precision() + 40;
  for (int num : kSplitFractions) {
    Real m = split_point(a, b, num, prec);
    if (!m.is_point()) continue;
    const int s = certain_sign(p.evaluate(m));
    if (s != 0) return std::make_pair(std::move(m), s);
  }
  return std::nullopt;
}

Real root_bound(const IntervalPolynomial& p) {
  const int n = p.degree();
  const int prec = p.precision();
  Real lead = abs(p.coefficient(n));
  double best = 0.0;
  for (int k = 0; k < n; ++k) best = std::max(best, (abs(p.coefficient(k)) / lead).upper_double());
  const double bound = 1.0 + best;
  if (!std::isfinite(bound)) throw PrecisionExhausted("root bound overflows double range");
  int e = 0;
  std::frexp(bound, &e);
  return mul_2exp(Real(1, prec), e);
}

IsolationParts isolate_interval_route(const IntervalPolynomial& p, int max_depth) {
  IsolationParts out;
  const int prec = p.precision();
  Real bound = root_bound(p);
  int sa = certain_sign(p.evaluate(-bound));
  int sb = certain_sign(p.evaluate(bound));
  for (int grow = 0; grow < 8 && (sa == 0 || sb == 0); ++grow) {
    bound = mul_2exp(bound, 1);
    sa = certain_sign(p.evaluate(-bound));
    sb = certain_sign(p.evaluate(bound));
  }
  if (sa == 0 || sb == 0) {
    out.clusters.push_back({Real::between(-bound, bound), p.degree()});
    return out;
  }
  const int depth_cap = max_depth > 0 ? max_depth : std::max(prec - 8, 16);

  struct Node {
    Real a, b;
    int sa, sb, depth;
  };
  std::vector<Node> stack;
  stack.push_back({-bound, bound, sa, sb, 0});
  while (!stack.empty()) {
    Node node = std::move(stack.back());
    stack.pop_back();
    const int v = descartes_bound(p, node.a, node.b);
    if (v == 0) continue;
    if (v == 1) {
      if (node.sa != node.sb) out.roots.push_back({{Real::between(node.a, node.b), 1}, p});
      continue;
    }
    std::optional<std::pair<Real, int>> split;
    if (node.depth < depth_cap) split = signed_split_point(p, node.a, node.b);
    if (!split) {
      out.clusters.push_back({Real::between(node.a, node.b), v});
      continue;
    }
    auto& [m, sm] = *split;
    // Push right first so the left half is processed first.
    stack.push_back({m, node.b, sm, node.sb, node.depth + 1});
    stack.push_back({node.a, m, node.sa, sm, node.depth + 1});
  }
  auto by_lower = [](const auto& x, const auto& y) { return x.lower_double() < y.lower_double(); };
  std::sort(out.roots.begin(), out.roots.end(),
            [&](const SourcedRoot& x, const SourcedRoot& y) { return by_lower(x.root.enclosure, y.root.enclosure); });
  std::sort(out.clusters.begin(), out.clusters.end(),
            [&](const RootCluster& x, const RootCluster& y) { return by_lower(x.enclosure, y.enclosure); });
  return out;
}

// Bisection step: returns a strictly smaller bracket or nullopt if no
// decidable split point exists.
std::optional<Real> bisect_once(const IntervalPolynomial& p, const Real& bracket, int sign_lo) {
  Real a = bracket.lower(), b = bracket.upper();
  auto split = signed_split_point(p, a, b);
  if (!split) return std::nullopt;
  auto& [m, sm] = *split;
  if (sm == sign_lo) return Real::between(m, b);
  return Real::between(a, m);
}

Real refine_with_sign(const IntervalPolynomial& p, Real bracket, const Real& target_width) {
  const int sign_lo = certain_sign(p.evaluate(bracket.lower()));
  const int sign_hi = certain_sign(p.evaluate(bracket.upper()));
  if (sign_lo == 0 || sign_hi == 0) throw PrecisionExhausted("refine_root: sign at bracket end is undecided");
  if (sign_lo == sign_hi) throw DomainError("refine_root: bracket has no sign change");
  while (!certainly_less_equal(bracket.width(), target_width)) {
    auto next = bisect_once(p, bracket, sign_lo);
    if (!next) throw PrecisionExhausted("refine_root: polynomial sign undecided inside bracket");
    bracket = std::move(*next);
  }
  return bracket;
}

void refine_parts(IsolationParts& parts, const Real& min_width) {
  for (auto& sr : parts.roots) {
    if (!sr.source) continue;
    sr.root.enclosure = refine_with_sign(*sr.source, sr.root.enclosure, min_width);
  }
  // Roots of distinct square-free factors are distinct; shrink until the
  // enclosures are disjoint.
  auto by_lower = [](const SourcedRoot& x, const SourcedRoot& y) {
    return x.root.enclosure.lower_double() < y.root.enclosure.lower_double();
  };
  std::sort(parts.roots.begin(), parts.roots.end(), by_lower);
  for (int pass = 0; pass < 256; ++pass) {
    bool overlap = false;
    for (std::size_t j = 0; j + 1 < parts.roots.size(); ++j) {
      auto& x = parts.roots[j];
      auto& y = parts.roots[j + 1];
      if (certainly_less(x.root.enclosure.upper(), y.root.enclosure.lower())) continue;
      overlap = true;
      for (SourcedRoot* r : {&x, &y}) {
        if (!r->source) continue;
        Real half = mul_2exp(r->root.enclosure.width(), -1);
        r->root.enclosure = refine_with_sign(*r->source, r->root.enclosure, half);
      }
    }
    if (!overlap) return;
    std::sort(parts.roots.begin(), parts.roots.end(), by_lower);
  }
  throw PrecisionExhausted("root enclosures of distinct factors remain overlapping");
}

IsolationParts isolate_parts(const IntervalPolynomial& input, const Real& min_width, const IsolationOptions& options) {
  IntervalPolynomial p = input.trimmed();
  if (p.is_zero()) throw DomainError("cannot isolate the roots of the zero polynomial");
  p.degree();  // throws AmbiguousDegree

  const int prec = p.precision();
  int zero_mult = 0;
  while (zero_mult < static_cast<int>(p.size()) - 1 && p.coefficient(zero_mult).is_exact_zero()) ++zero_mult;
  IntervalPolynomial q(std::vector<Real>(p.coefficients().begin() + zero_mult, p.coefficients().end()));
  if (zero_mult > 0 && q.coefficient(0).contains_zero()) {
    // 0 might also be a root of the cofactor; fall back to one interval pass.
    zero_mult = 0;
    q = p;
  }

  IsolationParts parts;
  if (q.degree() >= 1) {
    bool handled = false;
    if (options.exact_multiplicity && q.is_exact() && q.degree() >= 2) {
      exact::RationalPoly rq;
      for (const Real& c : q.coefficients()) rq.push_back(c.exact_value());
      auto factors = exact::squarefree_decomposition(rq);
      const bool squarefree = std::all_of(factors.begin() + 1, factors.end(),
                                          [](const exact::RationalPoly& f) { return f.size() <= 1; });
      if (!squarefree) {
        handled = true;
        for (std::size_t i = 0; i < factors.size(); ++i) {
          if (factors[i].size() <= 1) continue;
          IntervalPolynomial f = IntervalPolynomial::from_rationals(factors[i], prec);
          IsolationParts sub = isolate_interval_route(f, options.max_depth);
          for (auto& sr : sub.roots) {
            sr.root.multiplicity = static_cast<int>(i) + 1;
            parts.roots.push_back(std::move(sr));
          }
          for (auto& c : sub.clusters) {
            c.max_roots *= static_cast<int>(i) + 1;
            parts.clusters.push_back(std::move(c));
          }
        }
      }
    }
    if (!handled) parts = isolate_interval_route(q, options.max_depth);
  }
  if (zero_mult > 0) parts.roots.push_back({{Real(0, prec), zero_mult}, std::nullopt});
  refine_parts(parts, min_width);
  std::sort(parts.clusters.begin(), parts.clusters.end(), [](const RootCluster& x, const RootCluster& y) {
    return x.enclosure.lower_double() < y.enclosure.lower_double();
  });
  return parts;
}

RootIsolation strip_sources(const IsolationParts& parts) {
  RootIsolation iso;
  for (const auto& sr : parts.roots) {
    iso.intervals.push_back(sr.root);
    iso.certified_count += sr.root.multiplicity;
  }
  iso.clusters = parts.clusters;
  iso.status = parts.clusters.empty() ? IsolationStatus::Complete : IsolationStatus::Incomplete;
  return iso;
}

// Splits enclosures that straddle 0 when p(0) != 0, so the sign of every
// isolated root is decided.
void resolve_signs(IsolationParts& parts) {
  for (auto& sr : parts.roots) {
    if (!sr.source) continue;
    const Real& e = sr.root.enclosure;
    if (!e.contains_zero() || e.is_exact_zero()) continue;
    const IntervalPolynomial& src = *sr.source;
    const Real zero(0, src.precision());
    const int s0 = certain_sign(src.evaluate(zero));
    if (s0 == 0) continue;
    const int slo = certain_sign(src.evaluate(e.lower()));
    sr.root.enclosure = (slo == s0) ? Real::between(zero, e.upper()) : Real::between(e.lower(), zero);
  }
}

enum class Separation { Satisfied, Violated, Unknown };

Separation check_separation(IsolationParts& parts, const Real& min_sep) {
  for (int pass = 0; pass < 512; ++pass) {
    bool pending = false;
    for (std::size_t j = 0; j + 1 < parts.roots.size(); ++j) {
      auto& x = parts.roots[j];
      auto& y = parts.roots[j + 1];
      if (certainly_greater_equal(y.root.enclosure.lower() - x.root.enclosure.upper(), min_sep)) continue;
      if (certainly_less(y.root.enclosure.upper() - x.root.enclosure.lower(), min_sep)) return Separation::Violated;
      pending = true;
      bool refined = false;
      for (SourcedRoot* r : {&x, &y}) {
        if (!r->source || r->root.enclosure.is_point()) continue;
        Real half = mul_2exp(r->root.enclosure.width(), -1);
        try {
          r->root.enclosure = refine_with_sign(*r->source, r->root.enclosure, half);
          refined = true;
        } catch (const PrecisionExhausted&) {
        }
      }
      if (!refined) return Separation::Unknown;
    }
    if (!pending) return Separation::Satisfied;
  }
  return Separation::Unknown;
}

}  // namespace

RootIsolation isolate_real_roots(const IntervalPolynomial& p, const Real& min_width, const IsolationOptions& options) {
  return strip_sources(isolate_parts(p, min_width, options));
}

RootIsolation isolate_real_roots(std::span<const mpq_class> coefficients, const Real& min_width,
                                 const IsolationOptions& options) {
  mpz_class den = 1;
  for (const auto& c : coefficients) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  std::vector<mpz_class> scaled;
  std::size_t bits = 0;
  for (const auto& c : coefficients) {
    scaled.push_back(c.get_num() * (den / c.get_den()));
    bits = std::max(bits, mpz_sizeinbase(scaled.back().get_mpz_t(), 2));
  }
  const int prec = std::max(min_width.precision(), static_cast<int>(bits) + 8);
  std::vector<Real> exact;
  for (const auto& c : scaled) exact.push_back(Real::from_integer(c, prec));
  return isolate_real_roots(IntervalPolynomial(std::move(exact)), min_width.with_precision(prec), options);
}

Real refine_root(const IntervalPolynomial& p, const Real& bracket, const Real& target_width) {
  return refine_with_sign(p, bracket, target_width);
}

HyperbolicityReport certify_hyperbolic(const IntervalPolynomial& p, RootSign root_sign,
                                       const std::optional<Real>& min_sep, const CertifyOptions& options) {
  HyperbolicityReport report;
  report.precision_bits = p.precision();
  if (p.is_zero()) {
    report.verdict = Verdict::Hyperbolic;
    report.reason = "zero polynomial (vacuous)";
    return report;
  }
  const int d = p.degree();
  report.degree = d;
  if (d == 0) {
    report.verdict = Verdict::Hyperbolic;
    report.reason = "constant polynomial (vacuous)";
    return report;
  }

  const Real width = Real::from_double(options.root_width, p.precision());
  IsolationParts parts = isolate_parts(p, width, options.isolation);
  resolve_signs(parts);

  auto finish = [&](Verdict v, std::string reason) {
    report.roots = strip_sources(parts);
    report.verdict = v;
    report.reason = std::move(reason);
    return report;
  };

  const Real zero(0, p.precision());
  auto wrong_sign = [&](const Real& e) {
    if (root_sign == RootSign::AllPositive) return certainly_less_equal(e, zero);
    if (root_sign == RootSign::AllNegative) return certainly_less_equal(zero, e);
    return false;
  };
  auto right_sign = [&](const Real& e) {
    if (root_sign == RootSign::AllPositive) return e.is_positive();
    if (root_sign == RootSign::AllNegative) return e.is_negative();
    return true;
  };

  int certified = 0;
  for (const auto& sr : parts.roots) {
    certified += sr.root.multiplicity;
    if (wrong_sign(sr.root.enclosure)) return finish(Verdict::NotHyperbolic, "certified root of the wrong sign");
  }
  int upper = certified;
  for (const auto& c : parts.clusters) upper += c.max_roots;
  if (upper < d) {
    return finish(Verdict::NotHyperbolic,
                  "at most " + std::to_string(upper) + " real roots for degree " + std::to_string(d));
  }
  if (min_sep) {
    for (const auto& sr : parts.roots) {
      if (sr.root.multiplicity > 1) return finish(Verdict::NotHyperbolic, "multiple root violates simplicity");
    }
  }

  if (!parts.clusters.empty()) {
    if (min_sep) {
      const bool all_narrow = std::all_of(parts.clusters.begin(), parts.clusters.end(), [&](const RootCluster& c) {
        return certainly_less(c.enclosure.width(), *min_sep);
      });
      if (all_narrow && d - certified > static_cast<int>(parts.clusters.size())) {
        return finish(Verdict::NotHyperbolic, "an unresolved cluster narrower than the separation holds two roots");
      }
    }
    return finish(Verdict::Undetermined, "unresolved root clusters");
  }

  for (const auto& sr : parts.roots) {
    if (!right_sign(sr.root.enclosure)) return finish(Verdict::Undetermined, "root sign undecided");
  }
  if (min_sep) {
    switch (check_separation(parts, *min_sep)) {
      case Separation::Violated: return finish(Verdict::NotHyperbolic, "two roots closer than the separation");
      case Separation::Unknown: return finish(Verdict::Undetermined, "separation undecided");
      case Separation::Satisfied: break;
    }
  }
  const bool all_simple = std::all_of(parts.roots.begin(), parts.roots.end(),
                                      [](const SourcedRoot& sr) { return sr.root.multiplicity == 1; });
  if (all_simple && parts.roots.size() >= 2) {
    std::optional<Real> best;
    for (std::size_t j = 0; j + 1 < parts.roots.size(); ++j) {
      Real gap = (parts.roots[j + 1].root.enclosure.lower() - parts.roots[j].root.enclosure.upper()).lower();
      if (!best || certainly_less(gap, *best)) best = gap;
    }
    report.min_separation = best;
  }
  return finish(Verdict::Hyperbolic, "all roots certified");
}

HyperbolicityReport certify_hyperbolic_adaptive(const PolynomialBuilder& build, RootSign root_sign,
                                                const std::optional<Real>& min_sep, const PrecisionPolicy& policy,
                                                const CertifyOptions& options) {
  HyperbolicityReport last;
  for (int bits = policy.initial_bits; bits <= policy.max_bits; bits *= 2) {
    try {
      last = certify_hyperbolic(build(bits), root_sign, min_sep, options);
    } catch (const AmbiguousDegree&) {
      if (bits * 2 > policy.max_bits) throw;
      continue;
    } catch (const PrecisionExhausted& e) {
      last = HyperbolicityReport{};
      last.precision_bits = bits;
      last.reason = e.what();
    }
    if (last.verdict != Verdict::Undetermined) return last;
  }
  return last;
}

RootIsolation isolate_real_roots_adaptive(const PolynomialBuilder& build, double min_width,
                                          const PrecisionPolicy& policy, const IsolationOptions& options) {
  for (int bits = policy.initial_bits; bits <= policy.max_bits; bits *= 2) {
    IntervalPolynomial p = build(bits);
    RootIsolation iso = isolate_real_roots(p, Real::from_double(min_width, bits), options);
    if (iso.status == IsolationStatus::Complete) return iso;
  }
  throw PrecisionExhausted("root isolation incomplete at " + std::to_string(policy.max_bits) + " bits");
}

}  // namespace hyperlp
