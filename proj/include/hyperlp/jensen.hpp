#ifndef HYPERLP_JENSEN_HPP
#define HYPERLP_JENSEN_HPP

#include <gmpxx.h>

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hyperlp/polynomial.hpp"
#include "hyperlp/real.hpp"
#include "hyperlp/roots.hpp"

namespace hyperlp {

/// a_n, a_{n+1}, ..., a_{n+d}.
struct SequenceWindow {
  long n = 0;
  std::vector<Real> values;

  static SequenceWindow from_rationals(long n, std::span<const mpq_class> values, int precision = kDefaultPrecision);
  int degree() const { return static_cast<int>(values.size()) - 1; }
};

/// f(t0), f(t0 + delta), ..., f(t0 + d delta).
struct SampleWindow {
  Real t0;
  Real delta;
  std::vector<Real> values;

  /// Samples f at t0 + k delta for k = 0..d.
  static SampleWindow sample(const std::function<Real(const Real&)>& f, const Real& t0, const Real& delta, int d);
  int degree() const { return static_cast<int>(values.size()) - 1; }
};

/// x -> sum_k c_k e^(k delta x).  Root questions are answered in y = e^(delta x).
class ExpPolynomial {
 public:
  ExpPolynomial(Real delta, std::vector<Real> coefficients);

  const Real& delta() const { return delta_; }
  const std::vector<Real>& coefficients() const { return coefficients_; }
  int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
  int precision() const;

  /// The ordinary polynomial sum_k c_k y^k.
  IntervalPolynomial in_y() const;
  Real evaluate(const Real& x) const;
  /// Multiplication by e^(delta x).
  ExpPolynomial times_exp() const;

  ExpPolynomial& operator+=(const ExpPolynomial& rhs);
  ExpPolynomial& operator-=(const ExpPolynomial& rhs);
  ExpPolynomial& operator*=(const Real& scalar);
  friend ExpPolynomial operator+(ExpPolynomial a, const ExpPolynomial& b) { return a += b; }
  friend ExpPolynomial operator-(ExpPolynomial a, const ExpPolynomial& b) { return a -= b; }
  friend ExpPolynomial operator*(ExpPolynomial a, const Real& s) { return a *= s; }

 private:
  Real delta_;
  std::vector<Real> coefficients_;
};

/// J(x) = sum_k C(d,k) a_{n+k} x^k.
IntervalPolynomial jensen_poly(const SequenceWindow& window);

/// A(x) = sum_k C(d,k) f^(k)(t) x^(d-k), given f(t), f'(t), ..., f^(d)(t).
IntervalPolynomial appell_poly(std::span<const Real> derivatives);

/// c_k = C(d,k) (-1)^(d-k) f(t0 + k delta) / delta^d.
ExpPolynomial delta_appell_poly(const SampleWindow& window);

/// (-1)^d J(-e^x) written as an exponential polynomial with delta = 1:
/// c_k = C(d,k) (-1)^(d-k) a_{n+k}.  Its zeros x correspond to the roots
/// w = -e^x of J, so J has d negative roots iff the result has d real zeros.
/// Throws WindowMismatch if J was not built from `window`.
ExpPolynomial jensen_to_delta_appell(const IntervalPolynomial& jensen, const SequenceWindow& window);

/// L_d^nu(-x) = sum_k C(d + nu, d - k) x^k / k!.  The generalized binomial
/// is a falling-factorial product, exact when nu is an exact rational.
IntervalPolynomial laguerre_poly(int d, const Real& nu);

struct ExpRootReport {
  Verdict verdict = Verdict::Undetermined;
  std::vector<IsolatedRoot> roots;  // enclosures in x, ascending
  std::optional<Real> min_separation;
  int degree = 0;
  int precision_bits = kDefaultPrecision;
  std::string reason;
};

/// Decides whether e has `degree` real zeros in x counted with
/// multiplicity, and, with min_sep, whether they are simple and pairwise at
/// least min_sep apart.
ExpRootReport certify_exp_polynomial(const ExpPolynomial& e, const std::optional<Real>& min_sep = std::nullopt,
                                     const CertifyOptions& options = {});

using ExpPolynomialBuilder = std::function<ExpPolynomial(int precision)>;

ExpRootReport certify_exp_polynomial_adaptive(const ExpPolynomialBuilder& build,
                                              const std::optional<Real>& min_sep = std::nullopt,
                                              const PrecisionPolicy& policy = {},
                                              const CertifyOptions& options = {});

}  // namespace hyperlp

#endif  // HYPERLP_JENSEN_HPP
