#include "hyperlp/jensen.hpp"

#include <algorithm>
#include <utility>

#include "hyperlp/errors.hpp"

namespace hyperlp {

namespace {

mpz_class binomial(unsigned long n, unsigned long k) {
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

Real signed_binomial(int d, int k, int precision) {
  mpz_class b = binomial(d, k);
  if ((d - k) % 2 != 0) b = -b;
  return Real::from_integer(b, precision);
}

int max_precision(const std::vector<Real>& values, int fallback) {
  int p = fallback;
  for (const auto& v : values) p = std::max(p, v.precision());
  return p;
}

}  // namespace

SequenceWindow SequenceWindow::from_rationals(long n, std::span<const mpq_class> values, int precision) {
  SequenceWindow w;
  w.n = n;
  for (const auto& v : values) w.values.push_back(Real::from_rational(v, precision));
  return w;
}

SampleWindow SampleWindow::sample(const std::function<Real(const Real&)>& f, const Real& t0, const Real& delta,
                                  int d) {
  SampleWindow w{t0, delta, {}};
  for (int k = 0; k <= d; ++k) w.values.push_back(f(t0 + delta * Real(k, delta.precision())));
  return w;
}

ExpPolynomial::ExpPolynomial(Real delta, std::vector<Real> coefficients)
    : delta_(std::move(delta)), coefficients_(std::move(coefficients)) {
  if (!delta_.is_positive()) throw DomainError("ExpPolynomial: delta must be positive");
  if (coefficients_.empty()) coefficients_.emplace_back(0, delta_.precision());
}

int ExpPolynomial::precision() const { return max_precision(coefficients_, delta_.precision()); }

IntervalPolynomial ExpPolynomial::in_y() const { return IntervalPolynomial(coefficients_); }

Real ExpPolynomial::evaluate(const Real& x) const { return in_y().evaluate(exp(delta_ * x)); }

ExpPolynomial ExpPolynomial::times_exp() const {
  std::vector<Real> c;
  c.reserve(coefficients_.size() + 1);
  c.emplace_back(0, precision());
  c.insert(c.end(), coefficients_.begin(), coefficients_.end());
  return ExpPolynomial(delta_, std::move(c));
}

ExpPolynomial& ExpPolynomial::operator+=(const ExpPolynomial& rhs) {
  if (rhs.coefficients_.size() > coefficients_.size()) coefficients_.resize(rhs.coefficients_.size(), Real(0, precision()));
  for (std::size_t k = 0; k < rhs.coefficients_.size(); ++k) coefficients_[k] += rhs.coefficients_[k];
  return *this;
}

ExpPolynomial& ExpPolynomial::operator-=(const ExpPolynomial& rhs) {
  if (rhs.coefficients_.size() > coefficients_.size()) coefficients_.resize(rhs.coefficients_.size(), Real(0, precision()));
  for (std::size_t k = 0; k < rhs.coefficients_.size(); ++k) coefficients_[k] -= rhs.coefficients_[k];
  return *this;
}

ExpPolynomial& ExpPolynomial::operator*=(const Real& scalar) {
  for (auto& c : coefficients_) c *= scalar;
  return *this;
}

IntervalPolynomial jensen_poly(const SequenceWindow& window) {
  if (window.values.empty()) throw DomainError("jensen_poly: empty window");
  const int d = window.degree();
  const int prec = max_precision(window.values, kDefaultPrecision);
  std::vector<Real> c;
  for (int k = 0; k <= d; ++k) c.push_back(Real::from_integer(binomial(d, k), prec) * window.values[k]);
  return IntervalPolynomial(std::move(c));
}

IntervalPolynomial appell_poly(std::span<const Real> derivatives) {
  if (derivatives.empty()) throw DomainError("appell_poly: no derivatives given");
  const int d = static_cast<int>(derivatives.size()) - 1;
  int prec = kDefaultPrecision;
  for (const auto& v : derivatives) prec = std::max(prec, v.precision());
  std::vector<Real> c(d + 1, Real(0, prec));
  for (int k = 0; k <= d; ++k) c[d - k] = Real::from_integer(binomial(d, k), prec) * derivatives[k];
  return IntervalPolynomial(std::move(c));
}

ExpPolynomial delta_appell_poly(const SampleWindow& window) {
  if (window.values.empty()) throw DomainError("delta_appell_poly: empty window");
  if (!window.delta.is_positive()) throw DomainError("delta_appell_poly: delta must be positive");
  const int d = window.degree();
  const int prec = max_precision(window.values, window.delta.precision());
  const Real scale = Real(1, prec) / pow(window.delta.with_precision(prec), static_cast<long>(d));
  std::vector<Real> c;
  for (int k = 0; k <= d; ++k) c.push_back(signed_binomial(d, k, prec) * window.values[k] * scale);
  return ExpPolynomial(window.delta, std::move(c));
}

ExpPolynomial jensen_to_delta_appell(const IntervalPolynomial& jensen, const SequenceWindow& window) {
  const int d = window.degree();
  if (static_cast<int>(jensen.size()) != d + 1) throw WindowMismatch("jensen_to_delta_appell: degree differs from window");
  const IntervalPolynomial expected = jensen_poly(window);
  for (int k = 0; k <= d; ++k) {
    if (!jensen.coefficient(k).overlaps(expected.coefficient(k))) {
      throw WindowMismatch("jensen_to_delta_appell: coefficient " + std::to_string(k) + " does not match the window");
    }
  }
  const int prec = std::max(jensen.precision(), max_precision(window.values, kDefaultPrecision));
  std::vector<Real> c;
  for (int k = 0; k <= d; ++k) c.push_back(signed_binomial(d, k, prec) * window.values[k]);
  return ExpPolynomial(Real(1, prec), std::move(c));
}

IntervalPolynomial laguerre_poly(int d, const Real& nu) {
  if (d < 0) throw DomainError("laguerre_poly: negative degree");
  const int prec = nu.precision();
  std::vector<Real> c;
  if (nu.is_point()) {
    const mpq_class v = nu.exact_value();
    for (int k = 0; k <= d; ++k) {
      const int m = d - k;
      mpq_class b = 1;
      for (int j = 0; j < m; ++j) b *= (v + d - j) / (j + 1);
      mpz_class kf;
      mpz_fac_ui(kf.get_mpz_t(), k);
      b /= kf;
      b.canonicalize();
      c.push_back(Real::from_rational(b, prec));
    }
    return IntervalPolynomial(std::move(c));
  }
  for (int k = 0; k <= d; ++k) {
    const int m = d - k;
    Real b(1, prec);
    for (int j = 0; j < m; ++j) b = b * (nu + Real(d - j, prec)) / Real(j + 1, prec);
    mpz_class kf;
    mpz_fac_ui(kf.get_mpz_t(), k);
    c.push_back(b / Real::from_integer(kf, prec));
  }
  return IntervalPolynomial(std::move(c));
}

namespace {

enum class GapStatus { Enough, TooSmall, Unknown };

GapStatus compare_gaps(const std::vector<IsolatedRoot>& xs, const Real& min_sep, Real& smallest) {
  GapStatus status = GapStatus::Enough;
  std::optional<Real> lo, hi;
  for (std::size_t i = 1; i < xs.size(); ++i) {
    const Real gap = xs[i].enclosure - xs[i - 1].enclosure;
    if (!lo || certainly_less(gap.lower(), *lo)) lo = gap.lower();
    if (!hi || certainly_less(gap.upper(), *hi)) hi = gap.upper();
    if (certainly_less(gap, min_sep)) {
      status = GapStatus::TooSmall;
    } else if (status == GapStatus::Enough && !certainly_less_equal(min_sep, gap)) {
      status = GapStatus::Unknown;
    }
  }
  if (lo) smallest = Real::between(*lo, *hi);
  return status;
}

}  // namespace

ExpRootReport certify_exp_polynomial(const ExpPolynomial& e, const std::optional<Real>& min_sep,
                                     const CertifyOptions& options) {
  ExpRootReport out;
  out.degree = e.degree();
  out.precision_bits = e.precision();
  const IntervalPolynomial y = e.in_y();
  if (y.is_zero() || e.degree() == 0) {
    out.verdict = Verdict::Hyperbolic;
    out.reason = "no zeros required";
    return out;
  }
  if (y.nominal_degree() < e.degree()) {
    out.verdict = Verdict::NotHyperbolic;
    out.reason = "leading coefficient vanishes; fewer than d zeros";
    return out;
  }
  if (!y.degree_certain()) {
    out.verdict = Verdict::Undetermined;
    out.reason = "leading coefficient enclosure contains zero";
    return out;
  }
  const HyperbolicityReport yr = certify_hyperbolic(y, RootSign::AllPositive, std::nullopt, options);
  if (yr.verdict != Verdict::Hyperbolic) {
    out.verdict = yr.verdict;
    out.reason = "in y = e^(delta x): " + yr.reason;
    return out;
  }
  std::vector<IsolatedRoot> y_roots = yr.roots.intervals;
  const Real delta = e.delta().with_precision(e.precision());
  auto to_x = [&] {
    out.roots.clear();
    for (const auto& r : y_roots) out.roots.push_back({log(r.enclosure) / delta, r.multiplicity});
  };
  to_x();
  if (!min_sep) {
    out.verdict = Verdict::Hyperbolic;
    return out;
  }
  for (const auto& r : y_roots) {
    if (r.multiplicity > 1) {
      out.verdict = Verdict::NotHyperbolic;
      out.reason = "multiple zero";
      return out;
    }
  }
  if (y_roots.size() < 2) {
    out.verdict = Verdict::Hyperbolic;
    return out;
  }
  Real width = Real::from_double(options.root_width, e.precision());
  for (int round = 0; round < 8; ++round) {
    Real smallest(e.precision());
    const GapStatus status = compare_gaps(out.roots, *min_sep, smallest);
    out.min_separation = smallest;
    if (status == GapStatus::Enough) {
      out.verdict = Verdict::Hyperbolic;
      return out;
    }
    if (status == GapStatus::TooSmall) {
      out.verdict = Verdict::NotHyperbolic;
      out.reason = "zeros closer than the required separation";
      return out;
    }
    width = mul_2exp(width, -16);
    try {
      for (auto& r : y_roots) r.enclosure = refine_root(y, r.enclosure, width);
    } catch (const PrecisionExhausted&) {
      break;
    }
    to_x();
  }
  out.verdict = Verdict::Undetermined;
  out.reason = "separation undecided at this precision";
  return out;
}

ExpRootReport certify_exp_polynomial_adaptive(const ExpPolynomialBuilder& build, const std::optional<Real>& min_sep,
                                              const PrecisionPolicy& policy, const CertifyOptions& options) {
  ExpRootReport last;
  for (int bits = policy.initial_bits; bits <= policy.max_bits; bits *= 2) {
    try {
      last = certify_exp_polynomial(build(bits), min_sep, options);
    } catch (const PrecisionExhausted& err) {
      last = ExpRootReport{};
      last.reason = err.what();
    } catch (const AmbiguousDegree& err) {
      last = ExpRootReport{};
      last.reason = err.what();
    }
    last.precision_bits = bits;
    if (last.verdict != Verdict::Undetermined) return last;
  }
  return last;
}

}  // namespace hyperlp
