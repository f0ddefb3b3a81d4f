#include <mpfr.h>

#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "hyperlp/errors.hpp"
#include "hyperlp/specfun.hpp"

using namespace hyperlp;

namespace {

Real half_int(long num) { return Real::from_rational(mpq_class(num, 2), 128); }

// Closed forms at z = 2 sqrt(r), evaluated with plain MPFR at 256 bits:
//   C_{1/2}(-r) = 2 sin z / (z sqrt(pi))
//   C_{3/2}(-r) = 4 (sin z / z - cos z) / (z^2 sqrt(pi))
double closed_form(int twice_nu, double r) {
  mpfr_t z, s, c, sp, out;
  mpfr_inits2(256, z, s, c, sp, out, static_cast<mpfr_ptr>(nullptr));
  mpfr_set_d(z, r, MPFR_RNDN);
  mpfr_sqrt(z, z, MPFR_RNDN);
  mpfr_mul_2ui(z, z, 1, MPFR_RNDN);
  mpfr_sin_cos(s, c, z, MPFR_RNDN);
  mpfr_const_pi(sp, MPFR_RNDN);
  mpfr_sqrt(sp, sp, MPFR_RNDN);
  if (twice_nu == 1) {
    mpfr_mul_2ui(out, s, 1, MPFR_RNDN);
    mpfr_div(out, out, z, MPFR_RNDN);
  } else {
    mpfr_div(out, s, z, MPFR_RNDN);
    mpfr_sub(out, out, c, MPFR_RNDN);
    mpfr_mul_2ui(out, out, 2, MPFR_RNDN);
    mpfr_div(out, out, z, MPFR_RNDN);
    mpfr_div(out, out, z, MPFR_RNDN);
  }
  mpfr_div(out, out, sp, MPFR_RNDN);
  const double v = mpfr_get_d(out, MPFR_RNDN);
  mpfr_clears(z, s, c, sp, out, static_cast<mpfr_ptr>(nullptr));
  return v;
}

// Direct 200-term summation at 256 bits with MPFR's own Gamma.
double direct_sum(double nu, double t) {
  mpfr_t acc, term, g, tk, kf;
  mpfr_inits2(256, acc, term, g, tk, kf, static_cast<mpfr_ptr>(nullptr));
  mpfr_set_zero(acc, 1);
  mpfr_set_ui(tk, 1, MPFR_RNDN);
  mpfr_set_ui(kf, 1, MPFR_RNDN);
  for (int k = 0; k < 200; ++k) {
    if (k > 0) {
      mpfr_mul_d(tk, tk, t, MPFR_RNDN);
      mpfr_mul_ui(kf, kf, k, MPFR_RNDN);
    }
    mpfr_set_d(g, nu + k + 1, MPFR_RNDN);
    mpfr_gamma(g, g, MPFR_RNDN);
    mpfr_mul(g, g, kf, MPFR_RNDN);
    mpfr_div(term, tk, g, MPFR_RNDN);
    mpfr_add(acc, acc, term, MPFR_RNDN);
  }
  const double v = mpfr_get_d(acc, MPFR_RNDN);
  mpfr_clears(acc, term, g, tk, kf, static_cast<mpfr_ptr>(nullptr));
  return v;
}

// Positive roots of tan z = z, one in each (k pi, k pi + pi/2).
std::vector<long double> tan_roots(int count) {
  std::vector<long double> out;
  const long double pi = 3.141592653589793238462643383279502884L;
  for (int k = 1; k <= count; ++k) {
    long double a = k * pi + 1e-12L, b = k * pi + pi / 2 - 1e-12L;
    auto f = [](long double z) { return std::sin(z) - z * std::cos(z); };
    const bool fa_neg = f(a) < 0;
    for (int it = 0; it < 200; ++it) {
      const long double m = (a + b) / 2;
      if ((f(m) < 0) == fa_neg) {
        a = m;
      } else {
        b = m;
      }
    }
    out.push_back((a + b) / 2);
  }
  return out;
}

}  // namespace

TEST_CASE("Bessel-Clifford reference values") {
  CHECK(bessel_clifford(Real(1, 128), Real(0, 128)).contains(Real(1, 128)));
  const Real r1 = sqr(Real::pi(128)) / Real(4, 128);
  const Real at_zero = bessel_clifford(half_int(1), -r1);
  CHECK(at_zero.contains_zero());
  CHECK(at_zero.radius().upper_double() < 1e-30);
  const Real c = bessel_clifford(half_int(3), Real(1, 128));
  CHECK(std::abs(c.to_double() - direct_sum(1.5, 1.0)) < 1e-15 * std::abs(direct_sum(1.5, 1.0)));
  CHECK(c.radius().upper_double() < 1e-30);
}

TEST_CASE("Bessel-Clifford agrees with closed forms at half-integer order") {
  for (double r : {0.1, 1.0, 5.047, 17.3, 40.0, 200.0}) {
    const Real t = -Real::from_double(r, 128);
    const double c1 = bessel_clifford(half_int(1), t).to_double();
    const double c3 = bessel_clifford(half_int(3), t).to_double();
    CHECK(std::abs(c1 - closed_form(1, r)) < 1e-14);
    CHECK(std::abs(c3 - closed_form(3, r)) < 1e-14);
  }
}

TEST_CASE("Bessel-Clifford domain and large arguments") {
  CHECK_THROWS_AS(bessel_clifford(Real(-1, 128), Real(1, 128)), DomainError);
  // Large negative argument: heavy cancellation is absorbed by guard bits.
  const Real big = bessel_clifford(half_int(1), Real(-10000, 128));
  CHECK(std::abs(big.to_double() - closed_form(1, 10000.0)) < 1e-15);
}

TEST_CASE("doubling precision stays inside the coarse enclosure") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> nu_dist(0.5, 5.0), t_dist(-50.0, 50.0);
  for (int trial = 0; trial < 100; ++trial) {
    const double nu = nu_dist(rng), t = t_dist(rng);
    const Real coarse = bessel_clifford(Real::from_double(nu, 128), Real::from_double(t, 128));
    const Real fine = bessel_clifford(Real::from_double(nu, 256), Real::from_double(t, 256));
    CHECK(coarse.contains(fine.mid()));
    CHECK(coarse.overlaps(fine));
  }
}

TEST_CASE("central differences of C_nu converge to C_{nu+1} at second order") {
  const Real nu = half_int(3);
  for (double t0 : {-7.5, -1.0, 0.3, 4.0}) {
    const Real t = Real::from_double(t0, 128);
    const Real target = bessel_clifford(nu + Real(1, 128), t);
    std::vector<double> errors;
    for (int j = 0; j < 4; ++j) {
      const Real h = mul_2exp(Real(1, 128), -6 - j);
      const Real diff = (bessel_clifford(nu, t + h) - bessel_clifford(nu, t - h)) / (Real(2, 128) * h);
      errors.push_back(std::abs((diff - target).to_double()));
    }
    for (std::size_t j = 1; j < errors.size(); ++j) {
      CHECK(std::log2(errors[j - 1] / errors[j]) >= 1.9);
    }
  }
}

TEST_CASE("zeros of C_{1/2} are k^2 pi^2 / 4") {
  const ZeroTable table = bessel_clifford_zeros(half_int(1), 20);
  REQUIRE(table.zeros.size() == 20);
  REQUIRE(table.separations.size() == 19);
  const Real pi2_4 = sqr(Real::pi(128)) / Real(4, 128);
  for (int k = 1; k <= 20; ++k) {
    const Real exact = pi2_4 * Real(static_cast<long>(k) * k, 128);
    const Real& z = table.zeros[k - 1];
    CHECK(z.width().upper_double() < 1e-20);
    CHECK(z.overlaps(exact));
  }
  CHECK(table.separations[0].overlaps(Real(3, 128) * pi2_4));
}

TEST_CASE("zeros of C_{-1/2} are (k - 1/2)^2 pi^2 / 4") {
  const ZeroTable table = bessel_clifford_zeros(half_int(-1), 10);
  const Real pi2_4 = sqr(Real::pi(128)) / Real(4, 128);
  for (int k = 1; k <= 10; ++k) {
    const Real h = Real::from_rational(mpq_class(2 * k - 1, 2), 128);
    CHECK(table.zeros[k - 1].overlaps(pi2_4 * sqr(h)));
  }
}

TEST_CASE("consecutive zeros are separated by more than pi^2 / 4") {
  const Real pi2_4 = sqr(Real::pi(128)) / Real(4, 128);
  for (long twice_nu : {1L, 3L, 5L}) {
    const ZeroTable table = bessel_clifford_zeros(half_int(twice_nu), 21);
    for (std::size_t k = 1; k < table.zeros.size(); ++k) {
      CHECK(certainly_less(table.zeros[k - 1], table.zeros[k]));
      CHECK(certainly_greater(table.separations[k - 1], pi2_4));
    }
  }
}

TEST_CASE("the product over zeros converges to C_{3/2}") {
  const ZeroTable lib = bessel_clifford_zeros(half_int(3), 20);
  const auto z = tan_roots(1000);
  std::vector<long double> r;
  for (long double v : z) r.push_back(v * v / 4);
  for (int k = 0; k < 20; ++k) {
    CHECK(std::abs(static_cast<double>(r[k]) - lib.zeros[k].to_double()) < 1e-12 * static_cast<double>(r[k]));
  }
  const long double inv_gamma = 1.0L / std::tgamma(2.5L);
  for (double t : {-1.0, -0.4, 0.5, 1.0}) {
    const double exact = bessel_clifford(half_int(3), Real::from_double(t, 128)).to_double();
    double previous = INFINITY;
    for (int n : {10, 100, 1000}) {
      long double prod = inv_gamma;
      for (int k = 0; k < n; ++k) prod *= 1.0L + t / r[k];
      const double gap = std::abs(static_cast<double>(prod) - exact);
      CHECK(gap < previous);
      previous = gap;
    }
  }
}

TEST_CASE("R_alpha") {
  // At n = alpha / 24 the Bessel argument vanishes.
  const Real pi = Real::pi(128);
  const Real expected = Real(2, 128) * pi * pow(Real(2, 128) * pi, 13L) / gamma(Real(14, 128));
  CHECK(r_alpha(24, 1).overlaps(expected));
  CHECK_THROWS_AS(r_alpha(48, 1), DomainError);
  CHECK_THROWS_AS(r_alpha(0, 1), DomainError);

  const auto p = partition_integers(200);
  auto rel_error = [&](long n) {
    const double ratio = (r_alpha(1, n) / Real::from_integer(p[n], 128)).to_double();
    return std::abs(ratio - 1.0);
  };
  CHECK(rel_error(100) < rel_error(20));
  double previous = INFINITY;
  for (long n : {1L, 5L, 20L, 50L, 100L, 200L}) {
    const double e = rel_error(n);
    CHECK(e < previous);
    previous = e;
  }
  CHECK(previous < 1e-7);
}

TEST_CASE("Gamma and its reciprocal") {
  const GammaPair one = gamma_and_reciprocal(Real(1, 128));
  REQUIRE(one.gamma.has_value());
  CHECK(one.gamma->contains(Real(1, 128)));
  const GammaPair half = gamma_and_reciprocal(half_int(1));
  CHECK(half.gamma->overlaps(sqrt(Real::pi(128))));
  const GammaPair pole = gamma_and_reciprocal(Real(-2, 128));
  CHECK(pole.pole);
  CHECK_FALSE(pole.gamma.has_value());
  CHECK(pole.reciprocal.is_exact_zero());
}

TEST_CASE("Weierstrass product cross-checks 1/Gamma") {
  const Real z = half_int(3);
  const Real product = reciprocal_gamma_product(z, 10000);
  const Real primary = gamma_and_reciprocal(z).reciprocal;
  CHECK(product.overlaps(primary));
  CHECK(product.radius().upper_double() < 1e-7);
  for (double x : {-3.7, -0.5, 0.25, 2.0, 6.5}) {
    const Real zx = Real::from_double(x, 128);
    CHECK(reciprocal_gamma_product(zx, 4000).overlaps(gamma_and_reciprocal(zx).reciprocal));
  }
  // Poles are zeros of the product.
  CHECK(reciprocal_gamma_product(Real(-3, 128), 100).contains_zero());
  CHECK_THROWS_AS(reciprocal_gamma_product(Real(100, 128), 100), DomainError);
}
