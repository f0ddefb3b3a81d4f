#ifndef HYPERLP_POLYNOMIAL_HPP
#define HYPERLP_POLYNOMIAL_HPP

#include <gmpxx.h>

#include <span>
#include <vector>

#include "hyperlp/real.hpp"

namespace hyperlp {

/// Univariate polynomial with Real (enclosure) coefficients, stored in
/// ascending order: coefficient(k) multiplies x^k.
class IntervalPolynomial {
 public:
  IntervalPolynomial() = default;
  explicit IntervalPolynomial(std::vector<Real> coefficients);

  static IntervalPolynomial from_integers(std::span<const long> coefficients, int precision = kDefaultPrecision);
  static IntervalPolynomial from_rationals(std::span<const mpq_class> coefficients, int precision = kDefaultPrecision);
  /// lead * prod (x - r).
  static IntervalPolynomial from_roots(std::span<const Real> roots, const Real& lead);

  const std::vector<Real>& coefficients() const { return coefficients_; }
  const Real& coefficient(std::size_t k) const { return coefficients_.at(k); }
  std::size_t size() const { return coefficients_.size(); }
  int precision() const;

  /// Index of the highest coefficient that is not exactly zero (-1 for the
  /// zero polynomial).
  int nominal_degree() const;
  /// True when the coefficient at nominal_degree() excludes zero.
  bool degree_certain() const;
  /// Degree, or throws AmbiguousDegree when the top coefficient straddles 0.
  int degree() const;
  bool is_zero() const;
  /// Every coefficient is a point enclosure (exact dyadic value).
  bool is_exact() const;

  Real evaluate(const Real& x) const;
  IntervalPolynomial derivative() const;
  /// p(x + shift).
  IntervalPolynomial taylor_shift(const Real& shift) const;
  /// p(scale * x).
  IntervalPolynomial scale_argument(const Real& scale) const;
  /// x^n p(1/x) with n = size() - 1.
  IntervalPolynomial reversed() const;
  /// Drops trailing coefficients that are exactly zero.
  IntervalPolynomial trimmed() const;
  /// Quotient by (x - root), discarding the remainder.  Rigorous when root
  /// is an exact zero of the polynomial.
  IntervalPolynomial deflate(const Real& root) const;
  IntervalPolynomial with_precision(int precision) const;

  IntervalPolynomial& operator+=(const IntervalPolynomial& rhs);
  IntervalPolynomial& operator-=(const IntervalPolynomial& rhs);
  IntervalPolynomial& operator*=(const Real& scalar);
  friend IntervalPolynomial operator+(IntervalPolynomial a, const IntervalPolynomial& b) { return a += b; }
  friend IntervalPolynomial operator-(IntervalPolynomial a, const IntervalPolynomial& b) { return a -= b; }
  friend IntervalPolynomial operator*(IntervalPolynomial a, const Real& s) { return a *= s; }
  friend IntervalPolynomial operator*(const IntervalPolynomial& a, const IntervalPolynomial& b);

 private:
  std::vector<Real> coefficients_;
};

/// Exact rational polynomial helpers used by the exact-coefficient path of
/// root isolation.
namespace exact {

using RationalPoly = std::vector<mpq_class>;

void normalize(RationalPoly& p);
RationalPoly derivative(const RationalPoly& p);
/// Remainder of a / b; b must be nonzero.
RationalPoly remainder(const RationalPoly& a, const RationalPoly& b);
RationalPoly quotient(const RationalPoly& a, const RationalPoly& b);
RationalPoly gcd(RationalPoly a, RationalPoly b);
/// Square-free decomposition p = c * prod_i f_i^i; entry i-1 holds f_i.
std::vector<RationalPoly> squarefree_decomposition(const RationalPoly& p);

}  // namespace exact

}  // namespace hyperlp

#endif  // HYPERLP_POLYNOMIAL_HPP
