#ifndef HYPERLP_SPECFUN_HPP
#define HYPERLP_SPECFUN_HPP

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "hyperlp/real.hpp"

namespace hyperlp {

/// Bessel-Clifford function C_nu(t) = sum_k t^k / (Gamma(nu + k + 1) k!).
///
/// The series is summed at a working precision raised by the expected
/// cancellation (about 2 sqrt|t| / ln 2 bits) and stopped once a geometric
/// majorant of the tail falls below the accumulated rounding error; the tail
/// bound is folded into the enclosure.  Requires nu > -1.  Throws
/// PrecisionExhausted after 10 (|t| + precision) terms.
Real bessel_clifford(const Real& nu, const Real& t);

/// Absolute values r_1 < r_2 < ... of the zeros of C_nu, with successive
/// differences.
struct ZeroTable {
  Real nu;
  std::vector<Real> zeros;
  std::vector<Real> separations;
};

/// First `count` zeros of C_nu on the negative axis.  Each enclosure brackets
/// a certified sign change of r -> C_nu(-r).  Brackets come from a scan in
/// z = 2 sqrt(r) with step pi/8, which relies on consecutive Bessel zeros
/// being more than pi/8 apart for nu > -1.
ZeroTable bessel_clifford_zeros(const Real& nu, int count, double target_width = 0x1p-80);

/// First term of the Rademacher-type expansion of the fractional partition
/// function:
///   R_alpha(n) = 2 pi (pi alpha / 12)^(alpha/2 + 1)
///                * C_{alpha/2 + 1}(pi^2 alpha / 6 * (n - alpha / 24)).
/// Throws DomainError unless alpha > 0 and n >= alpha / 24.
Real r_alpha(const mpq_class& alpha, long n, int precision = kDefaultPrecision);

/// Gamma(z) and 1/Gamma(z).  At the poles z = 0, -1, -2, ... `gamma` is
/// empty and the reciprocal is exactly zero.
struct GammaPair {
  std::optional<Real> gamma;
  Real reciprocal;
  bool pole = false;
};
GammaPair gamma_and_reciprocal(const Real& z);

/// Independent route to 1/Gamma(z) through the Weierstrass product
///   e^(-gamma z) / Gamma(z) = z prod_{n>=1} (1 + z/n) e^(-z/n),
/// truncated after `factors` terms with the first-order tail correction
/// exp(-z^2 / (2N)).  The remaining truncation error of the logarithm is at
/// most z^2/(2N^2) + |z|^3/(3N^2) for |z| <= N/2 and is folded into the
/// enclosure.
Real reciprocal_gamma_product(const Real& z, long factors);

enum class PartitionKind { Ordinary, Fractional };

struct PartitionTable {
  PartitionKind kind = PartitionKind::Ordinary;
  mpq_class alpha = 1;
  std::vector<mpq_class> values;  // values[n] = p_alpha(n)
};

/// p(0..N) from Euler's pentagonal-number recurrence.
PartitionTable partition_numbers(long max_n);
std::vector<mpz_class> partition_integers(long max_n);

/// Coefficients of prod_k (1 - x^k)^(-alpha) for n = 0..N, from
/// n p_alpha(n) = alpha sum_{k=1}^n sigma(k) p_alpha(n - k).
PartitionTable fractional_partition(const mpq_class& alpha, long max_n);

}  // namespace hyperlp

#endif  // HYPERLP_SPECFUN_HPP
