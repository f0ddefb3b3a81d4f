#include "hyperlp/polynomial.hpp"

#include <algorithm>
#include <utility>

#include "hyperlp/errors.hpp"

namespace hyperlp {

IntervalPolynomial::IntervalPolynomial(std::vector<Real> coefficients)
    : coefficients_(std::move(coefficients)) {}

IntervalPolynomial IntervalPolynomial::from_integers(std::span<const long> coefficients, int precision) {
  std::vector<Real> c;
  c.reserve(coefficients.size());
  for (long v : coefficients) c.emplace_back(v, precision);
  return IntervalPolynomial(std::move(c));
}

IntervalPolynomial IntervalPolynomial::from_rationals(std::span<const mpq_class> coefficients, int precision) {
  std::vector<Real> c;
  c.reserve(coefficients.size());
  for (const auto& v : coefficients) c.push_back(Real::from_rational(v, precision));
  return IntervalPolynomial(std::move(c));
}

IntervalPolynomial IntervalPolynomial::from_roots(std::span<const Real> roots, const Real& lead) {
  std::vector<Real> c{lead};
  for (const Real& r : roots) {
    std::vector<Real> next(c.size() + 1, Real(0, lead.precision()));
    for (std::size_t k = 0; k < c.size(); ++k) {
      next[k + 1] += c[k];
      next[k] -= c[k] * r;
    }
    c = std::move(next);
  }
  return IntervalPolynomial(std::move(c));
}

int IntervalPolynomial::precision() const {
  int p = kDefaultPrecision;
  if (!coefficients_.empty()) p = coefficients_.front().precision();
  for (const Real& c : coefficients_) p = std::max(p, c.precision());
  return p;
}

int IntervalPolynomial::nominal_degree() const {
  for (int k = static_cast<int>(coefficients_.size()) - 1; k >= 0; --k) {
    if (!coefficients_[k].is_exact_zero()) return k;
  }
  return -1;
}

bool IntervalPolynomial::degree_certain() const {
  const int d = nominal_degree();
  return d < 0 || !coefficients_[d].contains_zero();
}

int IntervalPolynomial::degree() const {
  if (!degree_certain()) throw AmbiguousDegree("leading coefficient enclosure contains zero");
  return std::max(nominal_degree(), 0);
}

bool IntervalPolynomial::is_zero() const { return nominal_degree() < 0; }

bool IntervalPolynomial::is_exact() const {
  return std::all_of(coefficients_.begin(), coefficients_.end(), [](const Real& c) { return c.is_point(); });
}

Real IntervalPolynomial::evaluate(const Real& x) const {
  if (coefficients_.empty()) return Real(0, x.precision());
  Real acc = coefficients_.back();
  for (std::size_t k = coefficients_.size() - 1; k-- > 0;) {
    acc *= x;
    acc += coefficients_[k];
  }
  return acc;
}

IntervalPolynomial IntervalPolynomial::derivative() const {
  if (coefficients_.size() <= 1) return IntervalPolynomial({Real(0, precision())});
  std::vector<Real> c;
  c.reserve(coefficients_.size() - 1);
  for (std::size_t k = 1; k < coefficients_.size(); ++k) c.push_back(coefficients_[k] * Real(static_cast<long>(k), precision()));
  return IntervalPolynomial(std::move(c));
}

IntervalPolynomial IntervalPolynomial::taylor_shift(const Real& shift) const {
  std::vector<Real> c = coefficients_;
  const std::size_t n = c.size();
  if (shift.is_exact_zero()) return IntervalPolynomial(std::move(c));
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = n - 1; j-- > i;) {
      c[j] += shift * c[j + 1];
    }
  }
  return IntervalPolynomial(std::move(c));
}

IntervalPolynomial IntervalPolynomial::scale_argument(const Real& scale) const {
  std::vector<Real> c = coefficients_;
  Real power(1, scale.precision());
  for (std::size_t k = 1; k < c.size(); ++k) {
    power *= scale;
    c[k] *= power;
  }
  return IntervalPolynomial(std::move(c));
}

IntervalPolynomial IntervalPolynomial::reversed() const {
  std::vector<Real> c(coefficients_.rbegin(), coefficients_.rend());
  return IntervalPolynomial(std::move(c));
}

IntervalPolynomial IntervalPolynomial::trimmed() const {
  const int d = nominal_degree();
  if (d < 0) return IntervalPolynomial({Real(0, precision())});
  return IntervalPolynomial(std::vector<Real>(coefficients_.begin(), coefficients_.begin() + d + 1));
}

IntervalPolynomial IntervalPolynomial::deflate(const Real& root) const {
  IntervalPolynomial p = trimmed();
  const auto& a = p.coefficients_;
  if (a.size() <= 1) throw DomainError("deflate: polynomial has no roots to remove");
  std::vector<Real> q(a.size() - 1, Real(0, precision()));
  Real carry = a.back();
  for (std::size_t k = a.size() - 1; k-- > 0;) {
    q[k] = carry;
    carry = a[k] + carry * root;
  }
  return IntervalPolynomial(std::move(q));
}

IntervalPolynomial IntervalPolynomial::with_precision(int precision) const {
  std::vector<Real> c;
  c.reserve(coefficients_.size());
  for (const Real& v : coefficients_) c.push_back(v.with_precision(precision));
  return IntervalPolynomial(std::move(c));
}

IntervalPolynomial& IntervalPolynomial::operator+=(const IntervalPolynomial& rhs) {
  if (rhs.coefficients_.size() > coefficients_.size()) coefficients_.resize(rhs.coefficients_.size(), Real(0, rhs.precision()));
  for (std::size_t k = 0; k < rhs.coefficients_.size(); ++k) coefficients_[k] += rhs.coefficients_[k];
  return *this;
}

IntervalPolynomial& IntervalPolynomial::operator-=(const IntervalPolynomial& rhs) {
  if (rhs.coefficients_.size() > coefficients_.size()) coefficients_.resize(rhs.coefficients_.size(), Real(0, rhs.precision()));
  for (std::size_t k = 0; k < rhs.coefficients_.size(); ++k) coefficients_[k] -= rhs.coefficients_[k];
  return *this;
}

IntervalPolynomial& IntervalPolynomial::operator*=(const Real& scalar) {
  for (Real& c : coefficients_) c *= scalar;
  return *this;
}

IntervalPolynomial operator*(const IntervalPolynomial& a, const IntervalPolynomial& b) {
  if (a.size() == 0 || b.size() == 0) return IntervalPolynomial();
  std::vector<Real> c(a.size() + b.size() - 1, Real(0, std::max(a.precision(), b.precision())));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a.coefficient(i) * b.coefficient(j);
  }
  return IntervalPolynomial(std::move(c));
}

namespace exact {

void normalize(RationalPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

RationalPoly derivative(const RationalPoly& p) {
  RationalPoly d;
  for (std::size_t k = 1; k < p.size(); ++k) d.push_back(p[k] * static_cast<long>(k));
  normalize(d);
  return d;
}

namespace {

std::pair<RationalPoly, RationalPoly> divide(RationalPoly a, RationalPoly b) {
  normalize(a);
  normalize(b);
  if (b.empty()) throw DomainError("exact polynomial division by zero");
  RationalPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0);
  while (a.size() >= b.size() && !a.empty()) {
    const std::size_t shift = a.size() - b.size();
    const mpq_class factor = a.back() / b.back();
    q[shift] = factor;
    for (std::size_t k = 0; k < b.size(); ++k) a[k + shift] -= factor * b[k];
    a.pop_back();
    normalize(a);
  }
  normalize(q);
  return {q, a};
}

void make_monic(RationalPoly& p) {
  normalize(p);
  if (p.empty()) return;
  const mpq_class lead = p.back();
  for (auto& c : p) c /= lead;
}

}  // namespace

RationalPoly remainder(const RationalPoly& a, const RationalPoly& b) { return divide(a, b).second; }
RationalPoly quotient(const RationalPoly& a, const RationalPoly& b) { return divide(a, b).first; }

RationalPoly gcd(RationalPoly a, RationalPoly b) {
  normalize(a);
  normalize(b);
  while (!b.empty()) {
    RationalPoly r = remainder(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  make_monic(a);
  return a;
}

std::vector<RationalPoly> squarefree_decomposition(const RationalPoly& p) {
  RationalPoly f = p;
  normalize(f);
  std::vector<RationalPoly> factors;
  if (f.size() <= 1) return factors;
  // Yun's algorithm.
  RationalPoly a = gcd(f, derivative(f));
  RationalPoly b = quotient(f, a);
  RationalPoly c = quotient(derivative(f), a);
  RationalPoly d = c;
  {
    RationalPoly db = derivative(b);
    d.resize(std::max(d.size(), db.size()));
    for (std::size_t k = 0; k < db.size(); ++k) d[k] -= db[k];
    normalize(d);
  }
  while (b.size() > 1) {
    RationalPoly g = gcd(b, d);
    factors.push_back(g);
    b = quotient(b, g);
    c = quotient(d, g);
    RationalPoly db = derivative(b);
    d = c;
    d.resize(std::max(d.size(), db.size()));
    for (std::size_t k = 0; k < db.size(); ++k) d[k] -= db[k];
    normalize(d);
  }
  return factors;
}

}  // namespace exact

}  // namespace hyperlp
