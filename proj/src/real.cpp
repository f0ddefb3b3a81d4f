#include "hyperlp/real.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <string>

#include "hyperlp/errors.hpp"

namespace hyperlp {

namespace {

struct ScratchFloat {
  explicit ScratchFloat(int precision) { mpfr_init2(value, precision); }
  ~ScratchFloat() { mpfr_clear(value); }
  ScratchFloat(const ScratchFloat&) = delete;
  ScratchFloat& operator=(const ScratchFloat&) = delete;
  mpfr_t value;
};

std::string take_mpfr_string(char* raw) {
  std::string out(raw);
  mpfr_free_str(raw);
  return out;
}

bool contains_nonpositive_integer(const Real& x) {
  if (mpfr_sgn(x.lo_ptr()) > 0) return false;
  ScratchFloat c(x.precision());
  mpfr_ceil(c.value, x.lo_ptr());
  return mpfr_lessequal_p(c.value, x.hi_ptr()) != 0;
}

}  // namespace

Real::Real(int precision) : precision_(precision) {
  mpfr_init2(lo_, precision_);
  mpfr_init2(hi_, precision_);
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

Real::Real(long value, int precision) : precision_(precision) {
  mpfr_init2(lo_, precision_);
  mpfr_init2(hi_, precision_);
  mpfr_set_si(lo_, value, MPFR_RNDD);
  mpfr_set_si(hi_, value, MPFR_RNDU);
}

Real::Real(const Real& other) : precision_(other.precision_) {
  mpfr_init2(lo_, precision_);
  mpfr_init2(hi_, precision_);
  mpfr_set(lo_, other.lo_, MPFR_RNDD);
  mpfr_set(hi_, other.hi_, MPFR_RNDU);
}

Real::Real(Real&& other) noexcept : precision_(other.precision_) {
  mpfr_init2(lo_, precision_);
  mpfr_init2(hi_, precision_);
  mpfr_swap(lo_, other.lo_);
  mpfr_swap(hi_, other.hi_);
}

Real& Real::operator=(const Real& other) {
  if (this == &other) return *this;
  if (precision_ != other.precision_) {
    precision_ = other.precision_;
    mpfr_set_prec(lo_, precision_);
    mpfr_set_prec(hi_, precision_);
  }
  mpfr_set(lo_, other.lo_, MPFR_RNDD);
  mpfr_set(hi_, other.hi_, MPFR_RNDU);
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  if (this == &other) return *this;
  if (precision_ == other.precision_) {
    mpfr_swap(lo_, other.lo_);
    mpfr_swap(hi_, other.hi_);
    return *this;
  }
  return *this = static_cast<const Real&>(other);
}

Real::~Real() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

Real Real::from_double(double value, int precision) {
  Real r(precision);
  mpfr_set_d(r.lo_, value, MPFR_RNDD);
  mpfr_set_d(r.hi_, value, MPFR_RNDU);
  r.check_nan("from_double");
  return r;
}

Real Real::from_integer(const mpz_class& value, int precision) {
  Real r(precision);
  mpfr_set_z(r.lo_, value.get_mpz_t(), MPFR_RNDD);
  mpfr_set_z(r.hi_, value.get_mpz_t(), MPFR_RNDU);
  return r;
}

Real Real::from_rational(const mpq_class& value, int precision) {
  Real r(precision);
  mpfr_set_q(r.lo_, value.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(r.hi_, value.get_mpq_t(), MPFR_RNDU);
  return r;
}

Real Real::from_decimal(std::string_view text, int precision) {
  std::string s(text);
  Real r(precision);
  if (mpfr_set_str(r.lo_, s.c_str(), 10, MPFR_RNDD) != 0 ||
      mpfr_set_str(r.hi_, s.c_str(), 10, MPFR_RNDU) != 0) {
    throw DomainError("not a decimal number: '" + s + "'");
  }
  r.check_nan("from_decimal");
  return r;
}

Real Real::hull(const Real& a, const Real& b) {
  Real r(std::max(a.precision_, b.precision_));
  mpfr_min(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_max(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return r;
}

Real Real::between(const Real& lo, const Real& hi) {
  Real r(std::max(lo.precision_, hi.precision_));
  mpfr_set(r.lo_, lo.lo_, MPFR_RNDD);
  mpfr_set(r.hi_, hi.hi_, MPFR_RNDU);
  if (mpfr_cmp(r.lo_, r.hi_) > 0) throw DomainError("Real::between: lower bound exceeds upper bound");
  return r;
}

Real Real::pi(int precision) {
  Real r(precision);
  mpfr_const_pi(r.lo_, MPFR_RNDD);
  mpfr_const_pi(r.hi_, MPFR_RNDU);
  return r;
}

Real Real::euler_gamma(int precision) {
  Real r(precision);
  mpfr_const_euler(r.lo_, MPFR_RNDD);
  mpfr_const_euler(r.hi_, MPFR_RNDU);
  return r;
}

Real Real::log2_const(int precision) {
  Real r(precision);
  mpfr_const_log2(r.lo_, MPFR_RNDD);
  mpfr_const_log2(r.hi_, MPFR_RNDU);
  return r;
}

Real Real::with_precision(int precision) const {
  Real r(precision);
  mpfr_set(r.lo_, lo_, MPFR_RNDD);
  mpfr_set(r.hi_, hi_, MPFR_RNDU);
  return r;
}

void Real::set_precision_at_least(int precision) {
  if (precision <= precision_) return;
  Real widened = with_precision(precision);
  *this = std::move(widened);
}

Real Real::lower() const {
  Real r(precision_);
  mpfr_set(r.lo_, lo_, MPFR_RNDD);
  mpfr_set(r.hi_, lo_, MPFR_RNDU);
  return r;
}

Real Real::upper() const {
  Real r(precision_);
  mpfr_set(r.lo_, hi_, MPFR_RNDD);
  mpfr_set(r.hi_, hi_, MPFR_RNDU);
  return r;
}

Real Real::mid() const {
  Real r(precision_ + 1);
  mpfr_add(r.lo_, lo_, hi_, MPFR_RNDN);
  mpfr_div_2ui(r.lo_, r.lo_, 1, MPFR_RNDN);
  mpfr_set(r.hi_, r.lo_, MPFR_RNDN);
  return r;
}

Real Real::radius() const {
  Real m = mid();
  Real r(precision_);
  ScratchFloat a(precision_);
  mpfr_sub(a.value, hi_, m.lo_, MPFR_RNDU);
  mpfr_sub(r.hi_, m.lo_, lo_, MPFR_RNDU);
  mpfr_max(r.hi_, r.hi_, a.value, MPFR_RNDU);
  mpfr_set(r.lo_, r.hi_, MPFR_RNDD);
  return r;
}

Real Real::width() const {
  Real r(precision_);
  mpfr_sub(r.hi_, hi_, lo_, MPFR_RNDU);
  mpfr_set(r.lo_, r.hi_, MPFR_RNDD);
  return r;
}

double Real::to_double() const {
  ScratchFloat m(precision_ + 1);
  mpfr_add(m.value, lo_, hi_, MPFR_RNDN);
  mpfr_div_2ui(m.value, m.value, 1, MPFR_RNDN);
  return mpfr_get_d(m.value, MPFR_RNDN);
}

double Real::lower_double() const { return mpfr_get_d(lo_, MPFR_RNDD); }
double Real::upper_double() const { return mpfr_get_d(hi_, MPFR_RNDU); }

bool Real::is_point() const { return mpfr_equal_p(lo_, hi_) != 0; }
bool Real::is_finite() const { return mpfr_number_p(lo_) && mpfr_number_p(hi_); }
bool Real::contains_zero() const { return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0; }
bool Real::is_positive() const { return mpfr_sgn(lo_) > 0; }
bool Real::is_negative() const { return mpfr_sgn(hi_) < 0; }
bool Real::is_exact_zero() const { return mpfr_zero_p(lo_) && mpfr_zero_p(hi_); }

bool Real::contains(const Real& other) const {
  return mpfr_lessequal_p(lo_, other.lo_) && mpfr_lessequal_p(other.hi_, hi_);
}

bool Real::overlaps(const Real& other) const {
  return mpfr_lessequal_p(lo_, other.hi_) && mpfr_lessequal_p(other.lo_, hi_);
}

mpq_class Real::exact_value() const {
  if (!is_point() || !is_finite()) throw DomainError("exact_value: enclosure is not a finite point");
  mpq_class q;
  mpfr_get_q(q.get_mpq_t(), lo_);
  return q;
}

void Real::check_nan(const char* op) const {
  if (mpfr_nan_p(lo_) || mpfr_nan_p(hi_)) throw DomainError(std::string(op) + ": result is not a number");
}

Real& Real::operator+=(const Real& rhs) {
  set_precision_at_least(rhs.precision_);
  mpfr_add(lo_, lo_, rhs.lo_, MPFR_RNDD);
  mpfr_add(hi_, hi_, rhs.hi_, MPFR_RNDU);
  check_nan("add");
  return *this;
}

Real& Real::operator-=(const Real& rhs) {
  set_precision_at_least(rhs.precision_);
  ScratchFloat t(precision_);
  mpfr_sub(t.value, lo_, rhs.hi_, MPFR_RNDD);
  mpfr_sub(hi_, hi_, rhs.lo_, MPFR_RNDU);
  mpfr_swap(lo_, t.value);
  check_nan("sub");
  return *this;
}

Real& Real::operator*=(const Real& rhs) {
  set_precision_at_least(rhs.precision_);
  if (mpfr_sgn(lo_) >= 0 && mpfr_sgn(rhs.lo_) >= 0) {
    mpfr_mul(lo_, lo_, rhs.lo_, MPFR_RNDD);
    mpfr_mul(hi_, hi_, rhs.hi_, MPFR_RNDU);
    check_nan("mul");
    return *this;
  }
  ScratchFloat lo(precision_), hi(precision_), t(precision_);
  mpfr_mul(lo.value, lo_, rhs.lo_, MPFR_RNDD);
  mpfr_mul(hi.value, lo_, rhs.lo_, MPFR_RNDU);
  auto fold = [&](mpfr_srcptr a, mpfr_srcptr b) {
    mpfr_mul(t.value, a, b, MPFR_RNDD);
    mpfr_min(lo.value, lo.value, t.value, MPFR_RNDD);
    mpfr_mul(t.value, a, b, MPFR_RNDU);
    mpfr_max(hi.value, hi.value, t.value, MPFR_RNDU);
  };
  fold(lo_, rhs.hi_);
  fold(hi_, rhs.lo_);
  fold(hi_, rhs.hi_);
  mpfr_swap(lo_, lo.value);
  mpfr_swap(hi_, hi.value);
  check_nan("mul");
  return *this;
}

Real& Real::operator/=(const Real& rhs) {
  if (rhs.contains_zero()) throw DomainError("division by an enclosure that contains zero");
  set_precision_at_least(rhs.precision_);
  ScratchFloat lo(precision_), hi(precision_), t(precision_);
  mpfr_div(lo.value, lo_, rhs.lo_, MPFR_RNDD);
  mpfr_div(hi.value, lo_, rhs.lo_, MPFR_RNDU);
  auto fold = [&](mpfr_srcptr a, mpfr_srcptr b) {
    mpfr_div(t.value, a, b, MPFR_RNDD);
    mpfr_min(lo.value, lo.value, t.value, MPFR_RNDD);
    mpfr_div(t.value, a, b, MPFR_RNDU);
    mpfr_max(hi.value, hi.value, t.value, MPFR_RNDU);
  };
  fold(lo_, rhs.hi_);
  fold(hi_, rhs.lo_);
  fold(hi_, rhs.hi_);
  mpfr_swap(lo_, lo.value);
  mpfr_swap(hi_, hi.value);
  check_nan("div");
  return *this;
}

Real operator-(const Real& value) {
  Real r(value.precision_);
  mpfr_neg(r.lo_, value.hi_, MPFR_RNDD);
  mpfr_neg(r.hi_, value.lo_, MPFR_RNDU);
  return r;
}

Real abs(const Real& value) {
  if (mpfr_sgn(value.lo_) >= 0) return value;
  if (mpfr_sgn(value.hi_) <= 0) return -value;
  Real r(value.precision_);
  mpfr_set_zero(r.lo_, 1);
  ScratchFloat neg_lo(value.precision_);
  mpfr_neg(neg_lo.value, value.lo_, MPFR_RNDU);
  mpfr_max(r.hi_, neg_lo.value, value.hi_, MPFR_RNDU);
  return r;
}

Real sqr(const Real& value) { return pow(value, 2L); }

Real sqrt(const Real& value) {
  if (mpfr_sgn(value.hi_) < 0) throw DomainError("sqrt of a negative enclosure");
  Real r(value.precision_);
  if (mpfr_sgn(value.lo_) < 0) {
    mpfr_set_zero(r.lo_, 1);
  } else {
    mpfr_sqrt(r.lo_, value.lo_, MPFR_RNDD);
  }
  mpfr_sqrt(r.hi_, value.hi_, MPFR_RNDU);
  return r;
}

Real exp(const Real& value) {
  Real r(value.precision_);
  mpfr_exp(r.lo_, value.lo_, MPFR_RNDD);
  mpfr_exp(r.hi_, value.hi_, MPFR_RNDU);
  return r;
}

Real log(const Real& value) {
  if (!value.is_positive()) throw DomainError("log of an enclosure that is not strictly positive");
  Real r(value.precision_);
  mpfr_log(r.lo_, value.lo_, MPFR_RNDD);
  mpfr_log(r.hi_, value.hi_, MPFR_RNDU);
  return r;
}

Real pow(const Real& base, long exponent) {
  if (exponent == 0) return Real(1, base.precision_);
  if (exponent < 0) return Real(1, base.precision_) / pow(base, -exponent);
  const unsigned long n = static_cast<unsigned long>(exponent);
  if (n % 2 == 1) {
    Real r(base.precision_);
    mpfr_pow_ui(r.lo_, base.lo_, n, MPFR_RNDD);
    mpfr_pow_ui(r.hi_, base.hi_, n, MPFR_RNDU);
    return r;
  }
  Real a = abs(base);
  Real r(base.precision_);
  mpfr_pow_ui(r.lo_, a.lo_, n, MPFR_RNDD);
  mpfr_pow_ui(r.hi_, a.hi_, n, MPFR_RNDU);
  return r;
}

Real pow(const Real& base, const Real& exponent) {
  if (!base.is_positive()) throw DomainError("pow: base enclosure must be strictly positive");
  if (base.is_point() && exponent.is_point()) {
    Real r(std::max(base.precision_, exponent.precision_));
    mpfr_pow(r.lo_, base.lo_, exponent.lo_, MPFR_RNDD);
    mpfr_pow(r.hi_, base.lo_, exponent.lo_, MPFR_RNDU);
    return r;
  }
  return exp(exponent * log(base));
}

Real mul_2exp(const Real& value, long exponent) {
  Real r(value.precision_);
  mpfr_mul_2si(r.lo_, value.lo_, exponent, MPFR_RNDD);
  mpfr_mul_2si(r.hi_, value.hi_, exponent, MPFR_RNDU);
  return r;
}

Real gamma(const Real& x) {
  if (contains_nonpositive_integer(x)) throw DomainError("gamma: enclosure contains a pole");
  const int prec = x.precision_;
  auto gamma_down = [&](mpfr_srcptr at, mpfr_ptr out) { mpfr_gamma(out, at, MPFR_RNDD); };
  auto gamma_up = [&](mpfr_srcptr at, mpfr_ptr out) { mpfr_gamma(out, at, MPFR_RNDU); };

  if (x.is_point()) {
    Real r(prec);
    gamma_down(x.lo_, r.lo_);
    gamma_up(x.lo_, r.hi_);
    return r;
  }
  if (x.is_negative()) {
    // Shift right with Gamma(x) = Gamma(x + m) / (x (x+1) ... (x+m-1)).
    long m = static_cast<long>(std::ceil(-x.lower_double())) + 1;
    Real denom(1, prec);
    for (long j = 0; j < m; ++j) denom *= x + Real(j, prec);
    return gamma(x + Real(m, prec)) / denom;
  }
  // Positive axis: Gamma decreases on (0, x*] and increases on [x*, inf),
  // x* = 1.46163214496836...; its minimum is 0.88560319441088...
  Real r(prec);
  if (mpfr_cmp_d(x.lo_, 1.4617) >= 0) {
    gamma_down(x.lo_, r.lo_);
    gamma_up(x.hi_, r.hi_);
  } else if (mpfr_cmp_d(x.hi_, 1.4616) <= 0) {
    gamma_down(x.hi_, r.lo_);
    gamma_up(x.lo_, r.hi_);
  } else {
    ScratchFloat t(prec);
    mpfr_set_d(r.lo_, 0.8856, MPFR_RNDD);
    gamma_up(x.lo_, r.hi_);
    gamma_up(x.hi_, t.value);
    mpfr_max(r.hi_, r.hi_, t.value, MPFR_RNDU);
  }
  return r;
}

bool certainly_less(const Real& a, const Real& b) { return mpfr_less_p(a.hi_, b.lo_) != 0; }
bool certainly_less_equal(const Real& a, const Real& b) { return mpfr_lessequal_p(a.hi_, b.lo_) != 0; }

std::string to_decimal(const Real& value, int digits) {
  Real m = value.mid();
  char* raw = nullptr;
  mpfr_asprintf(&raw, "%.*Re", digits - 1, m.lo_ptr());
  return take_mpfr_string(raw);
}

std::string to_string(const Real& value, int digits) {
  if (!value.is_finite()) return value.lower_double() < 0 && value.upper_double() > 0 ? "nan ± inf" : "inf";
  std::string printed = to_decimal(value, digits);
  // The printed midpoint is itself a decimal approximation; the radius must
  // cover the enclosure relative to the printed value.
  Real at = Real::from_decimal(printed, value.precision() + 64);
  ScratchFloat a(value.precision() + 64), b(value.precision() + 64);
  mpfr_sub(a.value, value.hi_ptr(), at.lo_ptr(), MPFR_RNDU);
  mpfr_sub(b.value, at.hi_ptr(), value.lo_ptr(), MPFR_RNDU);
  mpfr_max(a.value, a.value, b.value, MPFR_RNDU);
  if (mpfr_sgn(a.value) < 0) mpfr_set_zero(a.value, 1);
  char* raw = nullptr;
  mpfr_asprintf(&raw, "%.3RUe", a.value);
  return printed + " ± " + take_mpfr_string(raw);
}

Real parse_ball(std::string_view text, int precision) {
  std::string s(text);
  std::size_t sep = s.find("±");
  std::size_t sep_len = std::strlen("±");
  if (sep == std::string::npos) {
    sep = s.find("+/-");
    sep_len = 3;
  }
  auto trim = [](std::string t) {
    const auto b = t.find_first_not_of(" \t");
    const auto e = t.find_last_not_of(" \t");
    return b == std::string::npos ? std::string() : t.substr(b, e - b + 1);
  };
  if (sep == std::string::npos) return Real::from_decimal(trim(s), precision);
  Real center = Real::from_decimal(trim(s.substr(0, sep)), precision);
  Real rad = Real::from_decimal(trim(s.substr(sep + sep_len)), precision).upper();
  Real widen = Real::between(-rad, rad);
  return center + widen;
}

}  // namespace hyperlp
