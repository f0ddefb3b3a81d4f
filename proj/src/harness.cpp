#include "hyperlp/harness.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>
#include <random>

#include "hyperlp/errors.hpp"
#include "hyperlp/jensen.hpp"
#include "hyperlp/polynomial.hpp"
#include "hyperlp/roots.hpp"
#include "hyperlp/specfun.hpp"

namespace hyperlp {

std::string to_string(CaseOutcome outcome) {
  switch (outcome) {
    case CaseOutcome::Pass:
      return "pass";
    case CaseOutcome::Fail:
      return "fail";
    case CaseOutcome::Undetermined:
      return "undetermined";
    case CaseOutcome::Recorded:
      return "recorded";
  }
  return "?";
}

std::string rational_string(const mpq_class& q) { return q.get_str(); }

namespace {

long count_outcome(const std::vector<CaseResult>& cases, CaseOutcome o) {
  return static_cast<long>(std::count_if(cases.begin(), cases.end(), [o](const CaseResult& c) { return c.outcome == o; }));
}

}  // namespace

long SuiteReport::passed() const { return count_outcome(cases, CaseOutcome::Pass); }
long SuiteReport::failed() const { return count_outcome(cases, CaseOutcome::Fail); }
long SuiteReport::undetermined() const { return count_outcome(cases, CaseOutcome::Undetermined); }
long SuiteReport::recorded() const { return count_outcome(cases, CaseOutcome::Recorded); }
long SuiteReport::run() const { return passed() + failed() + undetermined(); }

std::vector<const CaseResult*> SuiteReport::failures() const {
  std::vector<const CaseResult*> out;
  for (const auto& c : cases) {
    if (c.outcome == CaseOutcome::Fail) out.push_back(&c);
  }
  return out;
}

Json SuiteReport::to_json() const {
  Json j;
  j["suite_id"] = suite_id;
  j["config"] = config;
  Json arr = Json::array();
  for (const auto& c : cases) {
    Json e;
    e["key"] = c.key;
    e["verdict"] = to_string(c.outcome);
    e["detail"] = c.detail;
    arr.push_back(std::move(e));
  }
  j["cases"] = std::move(arr);
  Json s;
  s["run"] = run();
  s["passed"] = passed();
  s["undetermined"] = undetermined();
  s["failed"] = failed();
  s["unweighted"] = recorded();
  j["summary"] = std::move(s);
  return j;
}

std::string SuiteReport::dump(int indent) const { return to_json().dump(indent); }

namespace {

// ---------------------------------------------------------------------------
// shared plumbing

using CaseBody = std::function<CaseResult(long)>;

std::vector<CaseResult> run_cases(long count, const HarnessOptions& options, const CaseBody& body) {
  std::vector<CaseResult> out(static_cast<std::size_t>(count));
  const int threads = options.jobs > 0 ? options.jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) if (options.parallel) num_threads(threads)
  for (long i = 0; i < count; ++i) {
    try {
      out[i] = body(i);
    } catch (const std::exception& err) {
      out[i].outcome = dynamic_cast<const PrecisionExhausted*>(&err) ? CaseOutcome::Undetermined : CaseOutcome::Fail;
      out[i].detail["error"] = err.what();
    }
  }
  return out;
}

void finish(SuiteReport& report, std::vector<CaseResult> cases) {
  std::sort(cases.begin(), cases.end(), [](const CaseResult& a, const CaseResult& b) { return a.key < b.key; });
  report.cases = std::move(cases);
}

Json options_json(const HarnessOptions& o) {
  Json j;
  j["precision_bits"] = o.precision;
  j["max_precision_bits"] = o.max_precision;
  return j;
}

std::string pad(long v, int width) {
  std::string s = std::to_string(v);
  if (static_cast<int>(s.size()) < width) s.insert(0, width - s.size(), '0');
  return s;
}

CaseOutcome outcome_of(Verdict v) {
  switch (v) {
    case Verdict::Hyperbolic:
      return CaseOutcome::Pass;
    case Verdict::NotHyperbolic:
      return CaseOutcome::Fail;
    case Verdict::Undetermined:
      return CaseOutcome::Undetermined;
  }
  return CaseOutcome::Undetermined;
}

std::string brief(const Real& r) { return to_string(r, 17); }

Json root_list(const std::vector<IsolatedRoot>& roots) {
  Json arr = Json::array();
  for (const auto& r : roots) {
    Json e;
    e["enclosure"] = brief(r.enclosure);
    if (r.multiplicity != 1) e["multiplicity"] = r.multiplicity;
    arr.push_back(std::move(e));
  }
  return arr;
}

mpz_class binomial(unsigned long n, unsigned long k) {
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

using QPoly = std::vector<mpq_class>;

QPoly poly_from_roots(const std::vector<mpq_class>& roots, const mpq_class& lead) {
  QPoly p{lead};
  for (const auto& r : roots) {
    QPoly next(p.size() + 1, 0);
    for (std::size_t k = 0; k < p.size(); ++k) {
      next[k + 1] += p[k];
      next[k] -= r * p[k];
    }
    p = std::move(next);
  }
  return p;
}

// p(t + s) by repeated synthetic division.
QPoly shift(QPoly p, const mpq_class& s) {
  const std::size_t n = p.size();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t k = n - 1; k > i; --k) p[k - 1] += s * p[k];
  }
  return p;
}

// ---------------------------------------------------------------------------
// delta-difference

struct DeltaInstance {
  std::vector<mpq_class> roots;  // descending
  mpq_class delta;
  mpq_class x;
  mpq_class lead = 1;
  std::function<std::vector<Real>(int)> expected;  // optional closed-form roots, descending
};

// Three-valued interval membership.
enum class Tri { Yes, No, Unknown };

Tri inside(const Real& r, const std::optional<Real>& lo, const std::optional<Real>& hi, bool open) {
  bool yes = true, no = false;
  if (lo) {
    const bool above = open ? certainly_greater(r, *lo) : certainly_greater_equal(r, *lo);
    const bool below = open ? certainly_less_equal(r, *lo) : certainly_less(r, *lo);
    yes = yes && above;
    no = no || below;
  }
  if (hi) {
    const bool under = open ? certainly_less(r, *hi) : certainly_less_equal(r, *hi);
    const bool over = open ? certainly_greater_equal(r, *hi) : certainly_greater(r, *hi);
    yes = yes && under;
    no = no || over;
  }
  if (no) return Tri::No;
  return yes ? Tri::Yes : Tri::Unknown;
}

struct LocatedRoot {
  Real value;
  std::optional<mpq_class> exact;
};

CaseResult check_delta_instance(const std::string& key, const DeltaInstance& inst, const HarnessOptions& options) {
  CaseResult res;
  res.key = key;
  const int n = static_cast<int>(inst.roots.size());
  res.detail["degree"] = n;
  res.detail["delta"] = rational_string(inst.delta);
  res.detail["x"] = inst.x.get_d();

  std::vector<mpq_class> exact_roots;
  for (int k = 0; k + 1 < n; ++k) {
    if (inst.roots[k] - inst.roots[k + 1] == inst.delta) exact_roots.push_back(inst.roots[k + 1]);
  }
  res.detail["exact_gap_roots"] = static_cast<long>(exact_roots.size());
  const QPoly f = poly_from_roots(inst.roots, inst.lead);
  const QPoly fs = shift(f, inst.delta);

  std::string last_reason = "precision cap reached";
  for (int bits = options.precision; bits <= options.max_precision; bits *= 2) {
    res.detail["precision_bits"] = bits;
    const Real delta = Real::from_rational(inst.delta, bits);
    const Real growth = exp(delta * Real::from_rational(inst.x, bits));
    const IntervalPolynomial g =
        IntervalPolynomial::from_rationals(fs, bits) * growth - IntervalPolynomial::from_rationals(f, bits);

    IntervalPolynomial q = g;
    for (const auto& r : exact_roots) {
      const Real rr = Real::from_rational(r, bits);
      if (!g.evaluate(rr).contains_zero()) {
        res.outcome = CaseOutcome::Fail;
        res.detail["reason"] = "exact-gap point is not a root of g";
        return res;
      }
      q = q.deflate(rr);
    }

    CertifyOptions copts;
    copts.root_width = std::ldexp(1.0, -bits / 2);
    HyperbolicityReport rep;
    try {
      rep = certify_hyperbolic(q, RootSign::Any, delta, copts);
    } catch (const AmbiguousDegree& err) {
      last_reason = err.what();
      continue;
    } catch (const PrecisionExhausted& err) {
      last_reason = err.what();
      continue;
    }
    if (rep.verdict == Verdict::NotHyperbolic) {
      res.outcome = CaseOutcome::Fail;
      res.detail["reason"] = "g is not delta-hyperbolic: " + rep.reason;
      return res;
    }
    if (rep.verdict == Verdict::Undetermined) {
      last_reason = rep.reason;
      continue;
    }

    std::vector<LocatedRoot> located;
    for (const auto& r : rep.roots.intervals) located.push_back({r.enclosure, std::nullopt});
    for (const auto& r : exact_roots) located.push_back({Real::from_rational(r, bits), r});
    std::sort(located.begin(), located.end(), [](const LocatedRoot& a, const LocatedRoot& b) {
      return a.value.mid().to_double() > b.value.mid().to_double() ||
             (a.value.mid().to_double() == b.value.mid().to_double() && certainly_greater(a.value.mid(), b.value.mid()));
    });
    if (static_cast<int>(located.size()) != n) {
      res.outcome = CaseOutcome::Fail;
      res.detail["reason"] = "g has " + std::to_string(located.size()) + " real roots, expected " + std::to_string(n);
      return res;
    }

    bool undecided = false;
    std::string failure;
    // Separation of neighbours, including exact-gap roots.
    for (int k = 0; k + 1 < n && failure.empty(); ++k) {
      const auto& a = located[k];
      const auto& b = located[k + 1];
      if (a.exact && b.exact) {
        if (*a.exact - *b.exact < inst.delta) failure = "exact roots closer than delta";
        continue;
      }
      const Real gap = a.value - b.value;
      if (certainly_less(gap, delta)) {
        failure = "roots closer than delta";
      } else if (!certainly_greater_equal(gap, delta)) {
        undecided = true;
      }
    }
    // Localization.
    const bool positive = inst.x > 0;
    auto t = [&](int k) { return Real::from_rational(inst.roots[k - 1], bits); };
    for (int k = 1; k <= n && failure.empty(); ++k) {
      const LocatedRoot& r = located[k - 1];
      std::optional<Real> lo, hi;
      bool open = false;
      std::optional<mpq_class> qlo, qhi;
      if (positive) {
        if (k < n) {
          lo = t(k + 1), hi = t(k) - delta;
          qlo = inst.roots[k], qhi = inst.roots[k - 1] - inst.delta;
        } else {
          hi = t(n) - delta, open = true;
          qhi = inst.roots[n - 1] - inst.delta;
        }
      } else {
        if (k == 1) {
          lo = t(1), open = true;
          qlo = inst.roots[0];
        } else {
          lo = t(k), hi = t(k - 1) - delta;
          qlo = inst.roots[k - 1], qhi = inst.roots[k - 2] - inst.delta;
        }
      }
      Tri in;
      if (r.exact) {
        bool ok = true;
        if (qlo) ok = ok && (open ? *r.exact > *qlo : *r.exact >= *qlo);
        if (qhi) ok = ok && (open ? *r.exact < *qhi : *r.exact <= *qhi);
        in = ok ? Tri::Yes : Tri::No;
      } else {
        in = inside(r.value, lo, hi, open);
      }
      if (in == Tri::No) failure = "root " + std::to_string(k) + " outside its localization interval";
      if (in == Tri::Unknown) undecided = true;
    }
    if (failure.empty() && inst.expected) {
      const auto want = inst.expected(bits);
      for (std::size_t k = 0; k < want.size() && k < located.size(); ++k) {
        if (!located[k].value.overlaps(want[k])) failure = "closed-form root mismatch";
      }
    }
    Json roots = Json::array();
    for (const auto& r : located) roots.push_back(brief(r.value));
    res.detail["roots"] = std::move(roots);
    if (!failure.empty()) {
      res.outcome = CaseOutcome::Fail;
      res.detail["reason"] = failure;
      return res;
    }
    if (!undecided) {
      res.outcome = CaseOutcome::Pass;
      return res;
    }
    last_reason = "localization undecided";
  }
  res.outcome = CaseOutcome::Undetermined;
  res.detail["reason"] = last_reason;
  return res;
}

DeltaInstance random_instance(const DeltaDifferenceConfig& cfg, long index) {
  std::seed_seq seq{static_cast<std::uint32_t>(cfg.seed), static_cast<std::uint32_t>(cfg.seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  std::mt19937_64 rng(seq);
  std::uniform_int_distribution<int> deg(1, std::max(1, cfg.max_degree));
  std::uniform_real_distribution<double> start(-5.0, 5.0), xdist(-5.0, 5.0), scale(0.5, 4.0);
  std::normal_distribution<double> jitter;
  std::bernoulli_distribution coin;
  DeltaInstance inst;
  inst.delta = cfg.deltas[static_cast<std::size_t>(index) % cfg.deltas.size()];
  const int n = deg(rng);
  std::vector<mpq_class> ascending{mpq_class(start(rng))};
  for (int k = 1; k < n; ++k) ascending.push_back(ascending.back() + inst.delta + mpq_class(std::abs(jitter(rng))));
  inst.roots.assign(ascending.rbegin(), ascending.rend());
  double x = 0.0;
  while (x == 0.0) x = xdist(rng);
  inst.x = mpq_class(x);
  inst.lead = mpq_class(scale(rng)) * (coin(rng) ? 1 : -1);
  return inst;
}

std::vector<DeltaInstance> edge_instances() {
  std::vector<DeltaInstance> out;
  auto q = [](long a, long b = 1) { return mpq_class(a, b); };
  {
    // f = t: e^x (t + 1) - t vanishes at t = -e^x / (e^x - 1).
    for (long x : {1L, -1L}) {
      DeltaInstance i{{q(0)}, q(1), q(x), 1, {}};
      i.expected = [x](int bits) {
        const Real e = exp(Real(x, bits));
        return std::vector<Real>{-e / (e - Real(1, bits))};
      };
      out.push_back(i);
    }
  }
  out.push_back({{q(2), q(1), q(0)}, q(1), q(1), 1, {}});
  out.push_back({{q(2), q(1), q(0)}, q(1), q(-1, 2), 1, {}});
  out.push_back({{q(3, 10), q(2, 10), q(1, 10), q(0)}, q(1, 10), q(2), q(-3), {}});
  out.push_back({{q(5), q(4), q(5, 2), q(3, 2), q(-1)}, q(1), q(3, 10), 1, {}});
  out.push_back({{q(5), q(4), q(5, 2), q(3, 2), q(-1)}, q(1), q(-2), q(7, 3), {}});
  {
    std::vector<mpq_class> r;
    for (long k = 9; k >= 0; --k) r.push_back(q(k, 2));
    out.push_back({r, q(1, 2), q(1, 4), 1, {}});
    out.push_back({r, q(1, 2), q(-4), -1, {}});
  }
  out.push_back({{q(1), q(0)}, q(1), q(5), 1, {}});
  out.push_back({{q(1), q(0)}, q(1), q(-5), 1, {}});
  out.push_back({{q(7, 2), q(3), q(5, 2)}, q(1, 2), q(1, 1000), 1, {}});
  return out;
}

}  // namespace

SuiteReport suite_delta_difference(const DeltaDifferenceConfig& config, const HarnessOptions& options) {
  if (config.trials < 0 || config.deltas.empty()) throw DomainError("suite_delta_difference: invalid configuration");
  for (const auto& d : config.deltas) {
    if (d <= 0) throw DomainError("suite_delta_difference: delta must be positive");
  }
  SuiteReport report;
  report.suite_id = "delta_difference";
  report.config["trials"] = config.trials;
  report.config["max_degree"] = config.max_degree;
  Json deltas = Json::array();
  for (const auto& d : config.deltas) deltas.push_back(rational_string(d));
  report.config["deltas"] = deltas;
  report.config["seed"] = config.seed;
  report.config["edge_cases"] = config.edge_cases;
  report.config["precision"] = options_json(options);

  const std::vector<DeltaInstance> edges = config.edge_cases ? edge_instances() : std::vector<DeltaInstance>{};
  const long total = config.trials + static_cast<long>(edges.size());
  auto cases = run_cases(total, options, [&](long i) {
    if (i < config.trials) return check_delta_instance("trial-" + pad(i, 6), random_instance(config, i), options);
    const long e = i - config.trials;
    return check_delta_instance("edge-" + pad(e, 3), edges[e], options);
  });
  finish(report, std::move(cases));
  return report;
}

// ---------------------------------------------------------------------------
// Ono grid

namespace {

struct AlphaData {
  mpq_class alpha;
  long n_min = 1;
  long m_max = 0;
};

// C_nu(c (m - alpha/24)) and R_alpha(m) = K C(...) for m in [n_min, m_max].
struct AlphaSamples {
  std::vector<Real> bessel;
  std::vector<Real> r;
  Real c;
};

AlphaSamples sample_alpha(const AlphaData& a, int bits, long from, long to) {
  const int wp = bits + 16;
  AlphaSamples s;
  const Real pi = Real::pi(wp);
  const Real alpha = Real::from_rational(a.alpha, wp);
  mpq_class nu_q = a.alpha / 2 + 1;
  nu_q.canonicalize();
  const Real nu = Real::from_rational(nu_q, wp);
  s.c = sqr(pi) * alpha / Real(6, wp);
  const Real k = Real(2, wp) * pi * exp(nu * log(pi * alpha / Real(12, wp)));
  for (long m = from; m <= to; ++m) {
    mpq_class shift = mpq_class(m) - a.alpha / 24;
    shift.canonicalize();
    const Real cv = bessel_clifford(nu, s.c * Real::from_rational(shift, wp));
    s.bessel.push_back(cv.with_precision(bits));
    s.r.push_back((k * cv).with_precision(bits));
  }
  s.c = s.c.with_precision(bits);
  return s;
}

}  // namespace

SuiteReport suite_ono_grid(const OnoGridConfig& config, const HarnessOptions& options) {
  SuiteReport report;
  report.suite_id = "ono_grid";
  Json alphas = Json::array();
  for (const auto& a : config.alphas) {
    if (a <= 0) throw DomainError("suite_ono_grid: alpha must be positive");
    alphas.push_back(rational_string(a));
  }
  report.config["alphas"] = alphas;
  report.config["n_max"] = config.n_max;
  report.config["d_max"] = config.d_max;
  report.config["proved_range"] = "0 < alpha <= 3/2";
  report.config["precision"] = options_json(options);

  const mpq_class limit(3, 2);
  std::vector<AlphaData> data;
  for (const auto& a : config.alphas) {
    AlphaData ad;
    ad.alpha = a;
    mpz_class ceil_q;
    mpq_class q = a / 24;
    mpz_cdiv_q(ceil_q.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    ad.n_min = std::max(1L, ceil_q.get_si());
    ad.m_max = config.n_max + config.d_max;
    data.push_back(ad);
  }

  // Base samples at the starting precision, one task per alpha.
  std::vector<AlphaSamples> base(data.size());
  {
    auto filled = run_cases(static_cast<long>(data.size()), options, [&](long i) {
      base[i] = sample_alpha(data[i], options.precision, data[i].n_min, data[i].m_max);
      return CaseResult{};
    });
    for (const auto& f : filled) {
      if (f.outcome == CaseOutcome::Fail) throw PrecisionExhausted("suite_ono_grid: sampling R_alpha failed");
    }
  }

  struct Cell {
    std::size_t a;
    long n;
    int d;
  };
  std::vector<Cell> cells;
  for (std::size_t a = 0; a < data.size(); ++a) {
    for (long n = data[a].n_min; n <= config.n_max; ++n) {
      for (int d = 0; d <= config.d_max; ++d) cells.push_back({a, n, d});
    }
  }

  auto cases = run_cases(static_cast<long>(cells.size()), options, [&](long i) {
    const Cell& cell = cells[i];
    const AlphaData& ad = data[cell.a];
    const bool proved = ad.alpha <= limit;
    CaseResult res;
    res.key = "alpha=" + rational_string(ad.alpha) + "/n=" + pad(cell.n, 3) + "/d=" + pad(cell.d, 2);
    res.detail["alpha"] = rational_string(ad.alpha);
    res.detail["n"] = cell.n;
    res.detail["d"] = cell.d;
    CaseOutcome outcome = CaseOutcome::Undetermined;
    for (int bits = options.precision; bits <= options.max_precision; bits *= 2) {
      AlphaSamples local;
      if (bits != options.precision) local = sample_alpha(ad, bits, cell.n, cell.n + cell.d);
      const long offset = bits == options.precision ? cell.n - ad.n_min : 0;
      const AlphaSamples& s = bits == options.precision ? base[cell.a] : local;
      SequenceWindow w;
      w.n = cell.n;
      std::vector<Real> bessel;
      for (int k = 0; k <= cell.d; ++k) {
        w.values.push_back(s.r[offset + k]);
        bessel.push_back(s.bessel[offset + k]);
      }
      Verdict jv, ev, dv = Verdict::Hyperbolic;
      try {
        const IntervalPolynomial j = jensen_poly(w);
        const HyperbolicityReport jr = certify_hyperbolic(j, RootSign::AllNegative);
        jv = jr.verdict;
        ev = certify_exp_polynomial(jensen_to_delta_appell(j, w)).verdict;
        if (proved) {
          const Real delta = s.c;
          const Real scale = Real(1, bits) / pow(delta, static_cast<long>(cell.d));
          std::vector<Real> c;
          for (int k = 0; k <= cell.d; ++k) {
            mpz_class b = binomial(cell.d, k);
            if ((cell.d - k) % 2) b = -b;
            c.push_back(Real::from_integer(b, bits) * bessel[k] * scale);
          }
          dv = certify_exp_polynomial(ExpPolynomial(delta, std::move(c))).verdict;
        }
        res.detail["jensen_roots"] = root_list(jr.roots.intervals);
      } catch (const AmbiguousDegree&) {
        continue;
      } catch (const PrecisionExhausted&) {
        continue;
      }
      res.detail["precision_bits"] = bits;
      res.detail["jensen"] = to_string(jv);
      res.detail["delta_one_form"] = to_string(ev);
      if (proved) res.detail["bessel_form"] = to_string(dv);
      if (jv == Verdict::NotHyperbolic || ev == Verdict::NotHyperbolic || dv == Verdict::NotHyperbolic) {
        outcome = CaseOutcome::Fail;
        break;
      }
      if (jv == Verdict::Hyperbolic && ev == Verdict::Hyperbolic && dv == Verdict::Hyperbolic) {
        outcome = CaseOutcome::Pass;
        break;
      }
    }
    res.outcome = proved ? outcome : CaseOutcome::Recorded;
    if (!proved) res.detail["observed"] = to_string(outcome);
    return res;
  });

  // Report-only: J_2 of R_1 against J_2 of exact p(n).
  if (std::any_of(config.alphas.begin(), config.alphas.end(), [](const mpq_class& a) { return a == 1; })) {
    const std::vector<long> ns{25, 50, 100, 200};
    const auto p = partition_integers(ns.back() + 2);
    double previous = INFINITY;
    bool converging = true;
    for (long n : ns) {
      CaseResult res;
      res.key = "trend/n=" + pad(n, 3);
      res.outcome = CaseOutcome::Recorded;
      std::vector<Real> rv, pv;
      for (int k = 0; k <= 2; ++k) {
        rv.push_back(r_alpha(1, n + k, options.precision));
        pv.push_back(Real::from_integer(p[n + k], options.precision));
      }
      SequenceWindow wr{n, rv}, wp{n, pv};
      const auto rr = certify_hyperbolic(jensen_poly(wr), RootSign::AllNegative);
      const auto pr = certify_hyperbolic(jensen_poly(wp), RootSign::AllNegative);
      double dist = NAN;
      if (rr.roots.intervals.size() == 2 && pr.roots.intervals.size() == 2) {
        dist = 0.0;
        for (int k = 0; k < 2; ++k) {
          const double a = rr.roots.intervals[k].enclosure.to_double();
          const double b = pr.roots.intervals[k].enclosure.to_double();
          dist = std::max(dist, std::abs(a - b) / std::abs(b));
        }
        converging = converging && dist < previous;
        previous = dist;
      }
      res.detail["relative_root_distance"] = dist;
      res.detail["r_alpha_verdict"] = to_string(rr.verdict);
      res.detail["partition_verdict"] = to_string(pr.verdict);
      res.detail["converging_so_far"] = converging;
      cases.push_back(std::move(res));
    }
  }
  finish(report, std::move(cases));
  return report;
}

// ---------------------------------------------------------------------------
// LP embedding

namespace {

std::string function_name(LpFunction f) {
  switch (f) {
    case LpFunction::BesselClifford:
      return "bessel_clifford";
    case LpFunction::Gaussian:
      return "gaussian";
    case LpFunction::ReciprocalGamma:
      return "reciprocal_gamma";
  }
  return "?";
}

Real lp_value(const LpEmbeddingConfig& cfg, const Real& t) {
  const int bits = t.precision();
  switch (cfg.function) {
    case LpFunction::BesselClifford:
      return bessel_clifford(Real::from_rational(cfg.parameter, bits), t);
    case LpFunction::Gaussian:
      return exp(-Real::from_rational(cfg.parameter, bits) * sqr(t));
    case LpFunction::ReciprocalGamma:
      return gamma_and_reciprocal(t).reciprocal;
  }
  throw DomainError("lp_value: unknown function");
}

std::vector<Real> lp_samples(const LpEmbeddingConfig& cfg, int bits) {
  std::vector<Real> a;
  const Real t0 = Real::from_rational(cfg.t0, bits);
  const Real delta = Real::from_rational(cfg.delta, bits);
  for (int k = 0; k <= cfg.d_max; ++k) a.push_back(lp_value(cfg, t0 + delta * Real(k, bits)));
  return a;
}

// Least-squares fit of log|a_k| by A + B k + C k^2 (normal equations).
Json envelope_fit(const std::vector<Real>& a) {
  double s[5] = {0, 0, 0, 0, 0}, r[3] = {0, 0, 0};
  std::vector<double> logs;
  for (std::size_t k = 0; k < a.size(); ++k) {
    const double kk = static_cast<double>(k);
    const double v = std::log(std::abs(a[k].to_double()));
    logs.push_back(v);
    double p = 1.0;
    for (int e = 0; e < 5; ++e, p *= kk) s[e] += p;
    r[0] += v, r[1] += v * kk, r[2] += v * kk * kk;
  }
  double m[3][4] = {{s[0], s[1], s[2], r[0]}, {s[1], s[2], s[3], r[1]}, {s[2], s[3], s[4], r[2]}};
  for (int c = 0; c < 3; ++c) {
    int piv = c;
    for (int i = c + 1; i < 3; ++i) {
      if (std::abs(m[i][c]) > std::abs(m[piv][c])) piv = i;
    }
    std::swap(m[c], m[piv]);
    for (int i = 0; i < 3; ++i) {
      if (i == c || m[c][c] == 0.0) continue;
      const double f = m[i][c] / m[c][c];
      for (int j = c; j < 4; ++j) m[i][j] -= f * m[c][j];
    }
  }
  Json j;
  if (a.size() < 3) {
    j["note"] = "too few samples";
    return j;
  }
  const double A = m[0][3] / m[0][0], B = m[1][3] / m[1][1], C = m[2][3] / m[2][2];
  double worst = 0.0;
  for (std::size_t k = 0; k < logs.size(); ++k) {
    const double kk = static_cast<double>(k);
    worst = std::max(worst, std::abs(logs[k] - (A + B * kk + C * kk * kk)));
  }
  j["log_c"] = A;
  j["linear"] = B;
  j["quadratic"] = C;
  j["max_residual"] = worst;
  return j;
}

}  // namespace

SuiteReport suite_lp_embedding(const LpEmbeddingConfig& config, const HarnessOptions& options) {
  if (config.delta <= 0 || config.d_max < 0) throw DomainError("suite_lp_embedding: invalid configuration");
  SuiteReport report;
  report.suite_id = "lp_embedding";
  report.config["function"] = function_name(config.function);
  if (config.function != LpFunction::ReciprocalGamma) report.config["parameter"] = rational_string(config.parameter);
  report.config["t0"] = rational_string(config.t0);
  report.config["delta"] = rational_string(config.delta);
  report.config["d_max"] = config.d_max;
  report.config["precision"] = options_json(options);

  const std::vector<Real> base = lp_samples(config, options.precision);
  int sign = 0;
  for (std::size_t k = 0; k < base.size(); ++k) {
    const int s = base[k].is_positive() ? 1 : (base[k].is_negative() ? -1 : 0);
    if (s == 0 || (sign != 0 && s != sign)) {
      throw SignChangeDetected("suite_lp_embedding: samples change sign or vanish at k = " + std::to_string(k));
    }
    sign = s;
  }

  auto cases = run_cases(config.d_max + 1, options, [&](long d) {
    CaseResult res;
    res.key = "d=" + pad(d, 2);
    res.outcome = CaseOutcome::Undetermined;
    for (int bits = options.precision; bits <= options.max_precision; bits *= 2) {
      const std::vector<Real> a = bits == options.precision ? base : lp_samples(config, bits);
      SequenceWindow w{0, std::vector<Real>(a.begin(), a.begin() + d + 1)};
      const IntervalPolynomial j = jensen_poly(w);
      HyperbolicityReport rep;
      try {
        rep = certify_hyperbolic(j, RootSign::Any);
      } catch (const AmbiguousDegree&) {
        continue;
      }
      res.detail["precision_bits"] = bits;
      res.detail["verdict"] = to_string(rep.verdict);
      res.detail["roots"] = root_list(rep.roots.intervals);
      res.outcome = outcome_of(rep.verdict);
      if (config.function == LpFunction::ReciprocalGamma && config.delta == 1 && res.outcome != CaseOutcome::Undetermined) {
        // 1/Gamma(nu + 1 + k) with nu = t0 - 1 is the normalized Laguerre polynomial.
        const Real nu = Real::from_rational(config.t0 - 1, bits);
        mpz_class fac;
        mpz_fac_ui(fac.get_mpz_t(), d);
        const IntervalPolynomial l =
            laguerre_poly(static_cast<int>(d), nu) * (Real::from_integer(fac, bits) / gamma(nu + Real(d + 1, bits)));
        bool match = true;
        for (long k = 0; k <= d; ++k) match = match && l.coefficient(k).overlaps(j.coefficient(k));
        res.detail["laguerre_match"] = match;
        if (!match) res.outcome = CaseOutcome::Fail;
      }
      if (res.outcome != CaseOutcome::Undetermined) break;
    }
    return res;
  });
  CaseResult env;
  env.key = "envelope";
  env.outcome = CaseOutcome::Recorded;
  env.detail = envelope_fit(base);
  cases.push_back(std::move(env));
  finish(report, std::move(cases));
  return report;
}

// ---------------------------------------------------------------------------
// Gaussian

namespace {

ExpPolynomial gaussian_g(int d, const mpq_class& beta, int bits) {
  const Real b = Real::from_rational(beta, bits);
  std::vector<Real> c;
  for (int k = 0; k <= d; ++k) {
    mpz_class s = binomial(d, k);
    if ((d - k) % 2) s = -s;
    c.push_back(Real::from_integer(s, bits) * exp(-b * Real(static_cast<long>(k) * k, bits)));
  }
  return ExpPolynomial(Real(1, bits), std::move(c));
}

}  // namespace

SuiteReport suite_gaussian(const GaussianConfig& config, const HarnessOptions& options) {
  if (config.beta <= 0) throw DomainError("suite_gaussian: beta must be positive");
  SuiteReport report;
  report.suite_id = "gaussian";
  report.config["beta"] = rational_string(config.beta);
  report.config["d_max"] = config.d_max;
  report.config["recursion_points"] = config.recursion_points;
  report.config["seed"] = config.seed;
  report.config["precision"] = options_json(options);

  const long roots_cases = config.d_max + 1;
  const long total = roots_cases + config.d_max;
  auto cases = run_cases(total, options, [&](long i) {
    CaseResult res;
    if (i < roots_cases) {
      const int d = static_cast<int>(i);
      res.key = "roots/d=" + pad(d, 2);
      const Real two_beta = Real::from_rational(2 * config.beta, options.precision);
      const PrecisionPolicy policy{options.precision, options.max_precision};
      const ExpRootReport rep = certify_exp_polynomial_adaptive(
          [&](int bits) { return gaussian_g(d, config.beta, bits); }, two_beta, policy);
      res.outcome = outcome_of(rep.verdict);
      if (rep.verdict == Verdict::Hyperbolic && static_cast<int>(rep.roots.size()) != d) res.outcome = CaseOutcome::Fail;
      res.detail["verdict"] = to_string(rep.verdict);
      res.detail["precision_bits"] = rep.precision_bits;
      res.detail["roots"] = root_list(rep.roots);
      if (rep.min_separation) res.detail["min_gap"] = brief(*rep.min_separation);
      if (!rep.reason.empty()) res.detail["reason"] = rep.reason;
      if (d == 1 && res.outcome == CaseOutcome::Pass &&
          !rep.roots[0].enclosure.overlaps(Real::from_rational(config.beta, options.precision))) {
        res.outcome = CaseOutcome::Fail;
        res.detail["reason"] = "d = 1 root differs from beta";
      }
      return res;
    }
    const int d = static_cast<int>(i - roots_cases);
    res.key = "recursion/d=" + pad(d, 2);
    std::seed_seq seq{static_cast<std::uint32_t>(config.seed), static_cast<std::uint32_t>(d)};
    std::mt19937_64 rng(seq);
    std::uniform_real_distribution<double> xs(-4.0, 4.0);
    const int bits = options.precision;
    const ExpPolynomial next = gaussian_g(d + 1, config.beta, bits);
    const ExpPolynomial cur = gaussian_g(d, config.beta, bits);
    const Real beta = Real::from_rational(config.beta, bits);
    int agree = 0;
    for (int s = 0; s < config.recursion_points; ++s) {
      const Real x = Real::from_double(xs(rng), bits);
      const Real lhs = next.evaluate(x);
      const Real rhs = exp(x - beta) * cur.evaluate(x - Real(2, bits) * beta) - cur.evaluate(x);
      agree += lhs.overlaps(rhs) ? 1 : 0;
    }
    res.detail["points"] = config.recursion_points;
    res.detail["agreeing"] = agree;
    res.outcome = agree == config.recursion_points ? CaseOutcome::Pass : CaseOutcome::Fail;
    return res;
  });
  finish(report, std::move(cases));
  return report;
}

// ---------------------------------------------------------------------------
// Laguerre delta

SuiteReport suite_laguerre_delta(const LaguerreDeltaConfig& config, const HarnessOptions& options) {
  if (config.nu <= -1) throw DomainError("suite_laguerre_delta: nu must exceed -1");
  SuiteReport report;
  report.suite_id = "laguerre_delta";
  report.config["nu"] = rational_string(config.nu);
  Json deltas = Json::array();
  for (const auto& d : config.deltas) {
    if (d <= 0) throw DomainError("suite_laguerre_delta: delta must be positive");
    deltas.push_back(rational_string(d));
  }
  report.config["deltas"] = deltas;
  report.config["d_max"] = config.d_max;
  report.config["sampling"] = "a_k = 1/Gamma(delta (nu + 1 + k)); alt: 1/Gamma(nu + 1 + delta k)";
  report.config["precision"] = options_json(options);

  const mpq_class in_range(1);
  struct Cell {
    std::size_t delta;
    int d;
    bool alternative;
  };
  std::vector<Cell> cells;
  for (std::size_t i = 0; i < config.deltas.size(); ++i) {
    for (int d = 0; d <= config.d_max; ++d) {
      cells.push_back({i, d, false});
      cells.push_back({i, d, true});
    }
  }
  auto cases = run_cases(static_cast<long>(cells.size()), options, [&](long i) {
    const Cell& cell = cells[i];
    const mpq_class& dq = config.deltas[cell.delta];
    CaseResult res;
    res.key = std::string(cell.alternative ? "alt/" : "main/") + "delta=" + rational_string(dq) + "/d=" + pad(cell.d, 2);
    CaseOutcome outcome = CaseOutcome::Undetermined;
    for (int bits = options.precision; bits <= options.max_precision; bits *= 2) {
      const Real delta = Real::from_rational(dq, bits);
      const Real nu = Real::from_rational(config.nu, bits);
      SequenceWindow w;
      for (int k = 0; k <= cell.d; ++k) {
        const Real arg = cell.alternative ? nu + Real(1, bits) + delta * Real(k, bits)
                                          : delta * (nu + Real(1 + k, bits));
        w.values.push_back(gamma_and_reciprocal(arg).reciprocal);
      }
      const IntervalPolynomial j = jensen_poly(w);
      HyperbolicityReport rep;
      try {
        rep = certify_hyperbolic(j, RootSign::Any);
      } catch (const AmbiguousDegree&) {
        continue;
      }
      outcome = outcome_of(rep.verdict);
      res.detail["precision_bits"] = bits;
      res.detail["verdict"] = to_string(rep.verdict);
      res.detail["roots"] = root_list(rep.roots.intervals);
      if (!cell.alternative && dq == 1 && outcome != CaseOutcome::Undetermined) {
        mpz_class fac;
        mpz_fac_ui(fac.get_mpz_t(), cell.d);
        const IntervalPolynomial l =
            laguerre_poly(cell.d, nu) * (Real::from_integer(fac, bits) / gamma(nu + Real(cell.d + 1, bits)));
        bool match = true;
        for (int k = 0; k <= cell.d; ++k) match = match && l.coefficient(k).overlaps(j.coefficient(k));
        res.detail["laguerre_match"] = match;
        if (!match) outcome = CaseOutcome::Fail;
      }
      if (outcome != CaseOutcome::Undetermined) break;
    }
    const bool weighted = !cell.alternative && dq <= in_range;
    res.outcome = weighted ? outcome : CaseOutcome::Recorded;
    if (!weighted) res.detail["observed"] = to_string(outcome);
    return res;
  });
  finish(report, std::move(cases));
  return report;
}

// ---------------------------------------------------------------------------
// zeros

SuiteReport suite_zeros(const ZerosConfig& config, const HarnessOptions& options) {
  if (config.count < 1) throw DomainError("suite_zeros: count must be positive");
  SuiteReport report;
  report.suite_id = "zeros";
  Json nus = Json::array();
  for (const auto& nu : config.nus) {
    if (nu <= -1) throw DomainError("suite_zeros: nu must exceed -1");
    nus.push_back(rational_string(nu));
  }
  report.config["nus"] = nus;
  report.config["count"] = config.count;
  report.config["precision"] = options_json(options);

  std::vector<ZeroTable> tables(config.nus.size());
  std::vector<std::string> errors(config.nus.size());
  run_cases(static_cast<long>(config.nus.size()), options, [&](long i) {
    tables[i] = bessel_clifford_zeros(Real::from_rational(config.nus[i], options.precision), config.count);
    return CaseResult{};
  });

  std::vector<CaseResult> cases;
  const int bits = options.precision;
  const Real pi2_4 = sqr(Real::pi(bits)) / Real(4, bits);
  const Real tol = Real::from_decimal("1e-20", bits);
  for (std::size_t i = 0; i < config.nus.size(); ++i) {
    const std::string prefix = "nu=" + rational_string(config.nus[i]) + "/";
    const ZeroTable& t = tables[i];
    if (static_cast<int>(t.zeros.size()) != config.count) {
      CaseResult res;
      res.key = prefix + "table";
      res.outcome = CaseOutcome::Undetermined;
      res.detail["reason"] = "zero computation did not complete";
      cases.push_back(std::move(res));
      continue;
    }
    for (std::size_t k = 0; k < t.separations.size(); ++k) {
      CaseResult res;
      res.key = prefix + "gap=" + pad(static_cast<long>(k + 1), 2);
      const Real& s = t.separations[k];
      res.detail["r_k"] = brief(t.zeros[k]);
      res.detail["r_k+1"] = brief(t.zeros[k + 1]);
      res.detail["separation"] = brief(s);
      res.outcome = certainly_greater(s, pi2_4) ? CaseOutcome::Pass
                    : certainly_less_equal(s, pi2_4) ? CaseOutcome::Fail
                                                     : CaseOutcome::Undetermined;
      cases.push_back(std::move(res));
    }
    if (config.nus[i] == mpq_class(1, 2)) {
      for (std::size_t k = 0; k < t.zeros.size(); ++k) {
        CaseResult res;
        res.key = prefix + "closed=" + pad(static_cast<long>(k + 1), 2);
        const long kk = static_cast<long>(k + 1);
        const Real exact = pi2_4 * Real(kk * kk, bits);
        const Real dist = abs(t.zeros[k] - exact).upper();
        res.detail["computed"] = brief(t.zeros[k]);
        res.detail["closed_form"] = brief(exact);
        res.outcome = certainly_less(dist, tol) ? CaseOutcome::Pass : CaseOutcome::Fail;
        cases.push_back(std::move(res));
      }
    }
  }
  finish(report, std::move(cases));
  return report;
}

}  // namespace hyperlp
