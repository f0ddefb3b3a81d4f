#ifndef HYPERLP_REAL_HPP
#define HYPERLP_REAL_HPP

#include <gmpxx.h>
#include <mpfr.h>

#include <string>
#include <string_view>

namespace hyperlp {

inline constexpr int kDefaultPrecision = 128;
inline constexpr int kMaxPrecision = 1024;

/// Arbitrary-precision real number carrying a rigorous enclosure.
///
/// A Real stores a closed interval [lower, upper] whose endpoints are MPFR
/// floats at `precision()` bits.  Every operation rounds the lower endpoint
/// down and the upper endpoint up, so the exact mathematical result of the
/// operation applied to any points of the operands lies in the result.  The
/// midpoint/radius view (`mid()`, `radius()`) is derived from the endpoints.
///
/// Binary operations produce a result at the larger of the two operand
/// precisions.  Operations whose mathematical domain is violated by the
/// enclosure (log of a non-positive interval, division by an interval that
/// contains zero) throw DomainError.
class Real {
 public:
  explicit Real(int precision = kDefaultPrecision);
  Real(long value, int precision);
  Real(int value, int precision) : Real(static_cast<long>(value), precision) {}

  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  static Real from_double(double value, int precision = kDefaultPrecision);
  static Real from_integer(const mpz_class& value, int precision = kDefaultPrecision);
  static Real from_rational(const mpq_class& value, int precision = kDefaultPrecision);
  /// Parses a decimal literal ("-5.047", "1e-3") into a rigorous enclosure.
  static Real from_decimal(std::string_view text, int precision = kDefaultPrecision);
  /// Smallest interval containing both operands.
  static Real hull(const Real& a, const Real& b);
  /// Interval with the given (point) endpoints; requires lo <= hi.
  static Real between(const Real& lo, const Real& hi);
  static Real pi(int precision = kDefaultPrecision);
  static Real euler_gamma(int precision = kDefaultPrecision);
  static Real log2_const(int precision = kDefaultPrecision);

  int precision() const { return precision_; }
  /// Copy rounded outward to a different precision.
  Real with_precision(int precision) const;

  Real lower() const;
  Real upper() const;
  Real mid() const;
  /// Upper bound on max(|x - mid()|) over the enclosure.
  Real radius() const;
  Real width() const;
  double to_double() const;
  double lower_double() const;  // rounded down
  double upper_double() const;  // rounded up

  bool is_point() const;
  bool is_finite() const;
  bool contains_zero() const;
  bool is_positive() const;  // lower > 0
  bool is_negative() const;  // upper < 0
  bool is_exact_zero() const;
  bool contains(const Real& other) const;
  bool overlaps(const Real& other) const;
  /// Exact rational value of a point enclosure; requires is_point().
  mpq_class exact_value() const;

  Real& operator+=(const Real& rhs);
  Real& operator-=(const Real& rhs);
  Real& operator*=(const Real& rhs);
  Real& operator/=(const Real& rhs);

  friend Real operator+(Real lhs, const Real& rhs) { return lhs += rhs; }
  friend Real operator-(Real lhs, const Real& rhs) { return lhs -= rhs; }
  friend Real operator*(Real lhs, const Real& rhs) { return lhs *= rhs; }
  friend Real operator/(Real lhs, const Real& rhs) { return lhs /= rhs; }
  friend Real operator-(const Real& value);

  friend Real abs(const Real& value);
  friend Real sqr(const Real& value);
  friend Real sqrt(const Real& value);
  friend Real exp(const Real& value);
  friend Real log(const Real& value);
  friend Real pow(const Real& base, const Real& exponent);
  friend Real pow(const Real& base, long exponent);
  friend Real mul_2exp(const Real& value, long exponent);

  /// Enclosure of Gamma(x).  Throws DomainError if the enclosure touches a
  /// pole, i.e. contains a non-positive integer.
  friend Real gamma(const Real& value);

  // Certain comparisons: true only when the relation holds for every pair of
  // points in the two enclosures.
  friend bool certainly_less(const Real& a, const Real& b);
  friend bool certainly_less_equal(const Real& a, const Real& b);
  friend bool certainly_greater(const Real& a, const Real& b) { return certainly_less(b, a); }
  friend bool certainly_greater_equal(const Real& a, const Real& b) { return certainly_less_equal(b, a); }

  /// Access to the raw endpoints, for numerics that need MPFR directly.
  mpfr_srcptr lo_ptr() const { return lo_; }
  mpfr_srcptr hi_ptr() const { return hi_; }

 private:
  void check_nan(const char* op) const;
  void set_precision_at_least(int precision);

  int precision_;
  mpfr_t lo_;
  mpfr_t hi_;
};

/// Prints `value ± radius`; the radius is rounded up and absorbs the
/// rounding of the printed midpoint, so the printed ball contains the
/// enclosure.
std::string to_string(const Real& value, int digits = 30);
/// Midpoint only, for CSV columns.
std::string to_decimal(const Real& value, int digits = 30);
/// Parses the `v ± r` form produced by to_string.
Real parse_ball(std::string_view text, int precision = kDefaultPrecision);

}  // namespace hyperlp

#endif  // HYPERLP_REAL_HPP
