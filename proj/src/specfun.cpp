#include <algorithm>
#include <cmath>

#include "hyperlp/errors.hpp"
#include "hyperlp/specfun.hpp"

namespace hyperlp {

namespace {

double magnitude_upper(const Real& x) { return std::max(std::abs(x.lower_double()), std::abs(x.upper_double())); }

// Point z = -m for some integer m >= 0.
bool is_pole(const Real& z) {
  if (!z.is_point() || z.is_positive()) return false;
  const mpq_class q = z.exact_value();
  return q.get_den() == 1;
}

int sign_of(const Real& x) {
  if (x.is_positive()) return 1;
  if (x.is_negative()) return -1;
  return 0;
}

}  // namespace

Real bessel_clifford(const Real& nu, const Real& t) {
  if (!certainly_greater(nu, Real(-1, nu.precision()))) throw DomainError("bessel_clifford: requires nu > -1");
  const int prec = std::max(nu.precision(), t.precision());
  const double tabs = magnitude_upper(t);
  const int guard = static_cast<int>(std::ceil(2.0 * std::sqrt(tabs) * 1.4426950408889634)) + 32;
  const int wp = prec + guard;
  const Real x = t.with_precision(wp);
  const Real v = nu.with_precision(wp);
  const Real x_abs_hi = abs(x).upper();
  const Real v_lo = v.lower();

  Real term = Real(1, wp) / gamma(v + Real(1, wp));
  Real sum = term;
  const long cap = 10L * (static_cast<long>(std::ceil(tabs)) + prec);
  const Real eps = mul_2exp(Real(1, wp), -wp);
  for (long k = 0; k < cap; ++k) {
    const Real kp1(k + 1, wp);
    term = term * x / ((v + kp1) * kp1);
    sum = sum + term;
    // Remaining terms shrink at least geometrically with ratio q once q < 1.
    const Real kp2(k + 2, wp);
    const Real q = (x_abs_hi / ((v_lo + kp2) * kp2)).upper();
    if (!certainly_less(q, Real(1, wp) / Real(2, wp))) continue;
    const Real tail = (abs(term) * q / (Real(1, wp) - q)).upper();
    const Real scale = Real::hull(sum.width(), eps * abs(sum).upper());
    if (certainly_less_equal(tail, scale.upper())) {
      const Real result = sum + Real::between(-tail, tail);
      return result.with_precision(prec);
    }
  }
  throw PrecisionExhausted("bessel_clifford: series did not converge within the term cap");
}

ZeroTable bessel_clifford_zeros(const Real& nu, int count, double target_width) {
  if (count < 0) throw DomainError("bessel_clifford_zeros: negative count");
  ZeroTable table{nu, {}, {}};
  const int prec = nu.precision();
  const int wp = prec + 64;
  auto value_at = [&](const Real& r) { return bessel_clifford(nu.with_precision(wp), -r); };
  auto sign_at = [&](const Real& r) {
    const int s = sign_of(value_at(r));
    if (s == 0) throw PrecisionExhausted("bessel_clifford_zeros: sign undecidable at scan point");
    return s;
  };

  const double h = M_PI / 8.0;
  const double nu_d = nu.to_double();
  const double z_cap = 1.5 * M_PI * (count + std::abs(nu_d) / 2.0 + 10.0);
  Real prev_r(0, wp);
  int prev_sign = sign_at(prev_r);
  for (long step = 1; static_cast<int>(table.zeros.size()) < count; ++step) {
    double z = h * static_cast<double>(step);
    if (z > z_cap) throw BracketFailure("bessel_clifford_zeros: scan exceeded its range");
    Real r = Real::from_double(z * z / 4.0, wp);
    int s = sign_of(value_at(r));
    for (int nudge = 1; s == 0 && nudge < 8; ++nudge) {
      z += h * std::ldexp(1.0, -4 - nudge);
      r = Real::from_double(z * z / 4.0, wp);
      s = sign_of(value_at(r));
    }
    if (s == 0) throw PrecisionExhausted("bessel_clifford_zeros: sign undecidable at scan point");
    if (s != prev_sign) {
      Real a = prev_r, b = r;
      const Real target = Real::from_double(target_width, wp);
      while (!certainly_less_equal(b - a, target)) {
        const Real m = mul_2exp(a + b, -1).mid();
        if (!certainly_less(a, m) || !certainly_less(m, b)) break;
        const int sm = sign_of(value_at(m));
        if (sm == 0) throw PrecisionExhausted("bessel_clifford_zeros: sign undecidable during refinement");
        if (sm == prev_sign) {
          a = m;
        } else {
          b = m;
        }
      }
      table.zeros.push_back(Real::between(a, b).with_precision(prec));
      prev_sign = s;
    }
    prev_r = r;
  }
  for (std::size_t k = 1; k < table.zeros.size(); ++k) {
    table.separations.push_back(table.zeros[k] - table.zeros[k - 1]);
  }
  return table;
}

Real r_alpha(const mpq_class& alpha, long n, int precision) {
  if (alpha <= 0) throw DomainError("r_alpha: alpha must be positive");
  const mpq_class shift = mpq_class(n) - alpha / 24;
  if (shift < 0) throw DomainError("r_alpha: requires n >= alpha / 24");
  const int wp = precision + 32;
  const Real pi = Real::pi(wp);
  const Real a = Real::from_rational(alpha, wp);
  mpq_class nu_q = alpha / 2 + 1;
  nu_q.canonicalize();
  const Real nu = Real::from_rational(nu_q, wp);
  const Real arg = sqr(pi) * a / Real(6, wp) * Real::from_rational(shift, wp);
  const Real prefactor = Real(2, wp) * pi * exp(nu * log(pi * a / Real(12, wp)));
  return (prefactor * bessel_clifford(nu, arg)).with_precision(precision);
}

GammaPair gamma_and_reciprocal(const Real& z) {
  GammaPair out;
  if (is_pole(z)) {
    out.pole = true;
    out.reciprocal = Real(0, z.precision());
    return out;
  }
  const Real g = gamma(z);
  out.gamma = g;
  out.reciprocal = Real(1, z.precision()) / g;
  return out;
}

Real reciprocal_gamma_product(const Real& z, long factors) {
  if (factors < 1) throw DomainError("reciprocal_gamma_product: needs at least one factor");
  const double zabs = magnitude_upper(z);
  if (2.0 * zabs > static_cast<double>(factors)) {
    throw DomainError("reciprocal_gamma_product: requires |z| <= N/2");
  }
  const int wp = z.precision() + static_cast<int>(std::ceil(std::log2(static_cast<double>(factors)))) + 16;
  const Real x = z.with_precision(wp);
  const Real one(1, wp);
  Real product = x;
  Real harmonic(0, wp);
  for (long n = 1; n <= factors; ++n) {
    const Real inv = one / Real(n, wp);
    product = product * (one + x * inv);
    harmonic = harmonic + inv;
  }
  const Real big_n(factors, wp);
  const Real z2 = sqr(x);
  const Real err = ((z2 / Real(2, wp) + pow(abs(x), 3L) / Real(3, wp)) / sqr(big_n)).upper();
  const Real exponent = Real::euler_gamma(wp) * x - x * harmonic - z2 / (Real(2, wp) * big_n) +
                        Real::between(-err, err);
  return (product * exp(exponent)).with_precision(z.precision());
}

}  // namespace hyperlp
