#include "hyperlp/curves.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <ostream>

#include "hyperlp/errors.hpp"
#include "hyperlp/jensen.hpp"
#include "hyperlp/roots.hpp"

namespace hyperlp {

std::string to_string(CurveDomain domain) {
  switch (domain) {
    case CurveDomain::NegAxis:
      return "NegAxis";
    case CurveDomain::FullLine:
      return "FullLine";
    case CurveDomain::PosAxis:
      return "PosAxis";
  }
  return "?";
}

std::vector<Real> make_grid(const GridSpec& spec, const Real& delta) {
  if (!(spec.inner > 0.0) || !(spec.outer > spec.inner) || spec.points_per_side < 2) {
    throw DomainError("make_grid: need 0 < inner < outer and at least two points per side");
  }
  const double unit = 1.0 / delta.to_double();
  const double ratio = std::pow(spec.outer / spec.inner, 1.0 / (spec.points_per_side - 1));
  std::vector<double> mags;
  for (int j = 0; j < spec.points_per_side; ++j) {
    mags.push_back(j == spec.points_per_side - 1 ? spec.outer * unit : spec.inner * std::pow(ratio, j) * unit);
  }
  std::vector<Real> grid;
  for (auto it = mags.rbegin(); it != mags.rend(); ++it) grid.push_back(Real::from_double(-*it));
  for (double m : mags) grid.push_back(Real::from_double(m));
  return grid;
}

IntervalPolynomial appell_in_t(std::span<const Real> roots, const Real& delta, int d, const Real& x) {
  int prec = std::max(delta.precision(), x.precision());
  for (const auto& r : roots) prec = std::max(prec, r.precision());
  const Real dl = delta.with_precision(prec);
  const IntervalPolynomial f = IntervalPolynomial::from_roots(roots, Real(1, prec));
  const Real growth = exp(dl * x.with_precision(prec));
  const Real scale = Real(1, prec) / pow(dl, static_cast<long>(d));
  IntervalPolynomial acc({Real(0, prec)});
  Real weight(1, prec);  // e^(k delta x)
  for (int k = 0; k <= d; ++k) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), d, k);
    if ((d - k) % 2 != 0) b = -b;
    acc += f.taylor_shift(dl * Real(k, prec)) * (Real::from_integer(b, prec) * weight * scale);
    weight = weight * growth;
  }
  return acc;
}

namespace {

struct Column {
  Real x;
  std::vector<Real> t;  // descending
};

struct Tracer {
  std::span<const Real> roots;
  Real delta;
  int d;
  const TraceOptions& options;

  Column solve(const Real& x) const {
    const int n = static_cast<int>(roots.size());
    PolynomialBuilder build = [&](int bits) {
      return appell_in_t(roots, delta.with_precision(bits), d, x.with_precision(bits));
    };
    CertifyOptions copts;
    copts.root_width = options.root_width;
    const PrecisionPolicy policy{options.precision, kMaxPrecision};
    const HyperbolicityReport rep = certify_hyperbolic_adaptive(build, RootSign::Any, std::nullopt, policy, copts);
    if (rep.verdict != Verdict::Hyperbolic || rep.roots.certified_count != n ||
        static_cast<int>(rep.roots.intervals.size()) != n) {
      throw PrecisionExhausted("trace_root_curves: could not certify " + std::to_string(n) + " simple zeros at x = " +
                               to_string(x, 10));
    }
    Column col{x, {}};
    for (auto it = rep.roots.intervals.rbegin(); it != rep.roots.intervals.rend(); ++it) col.t.push_back(it->enclosure);
    return col;
  }

  // The new column must agree with a tangent predictor from the last two
  // accepted columns to within half the smallest gap between neighbours.
  static bool consistent(const std::vector<Column>& done, const Column& next) {
    const Column& a = done.back();
    double tol = INFINITY;
    for (std::size_t i = 1; i < a.t.size(); ++i) tol = std::min(tol, (a.t[i - 1] - a.t[i]).lower_double());
    if (!std::isfinite(tol)) return true;
    tol *= 0.5;
    for (std::size_t i = 0; i < a.t.size(); ++i) {
      double predicted = a.t[i].to_double();
      if (done.size() >= 2) {
        const Column& b = done[done.size() - 2];
        const double slope = (a.t[i].to_double() - b.t[i].to_double()) / (a.x.to_double() - b.x.to_double());
        predicted += slope * (next.x.to_double() - a.x.to_double());
      }
      if (std::abs(next.t[i].to_double() - predicted) > tol) return false;
    }
    return true;
  }

  void bridge(std::vector<Column>& done, Column next, int depth) const {
    if (consistent(done, next)) {
      done.push_back(std::move(next));
      return;
    }
    if (depth >= options.max_halvings) {
      throw BranchJumpDetected("trace_root_curves: branch assignment ambiguous near x = " + to_string(next.x, 10));
    }
    const Real mid = mul_2exp(done.back().x + next.x, -1).mid();
    bridge(done, solve(mid), depth + 1);
    bridge(done, std::move(next), depth + 1);
  }
};

}  // namespace

CurveFamily trace_root_curves(std::span<const Real> roots, const Real& delta, int d, const TraceOptions& options) {
  const int n = static_cast<int>(roots.size());
  if (n == 0) throw DomainError("trace_root_curves: f needs at least one root");
  if (d < 0 || d > n) throw DomainError("trace_root_curves: need 0 <= d <= n");
  if (!delta.is_positive()) throw DomainError("trace_root_curves: delta must be positive");
  for (int i = 1; i < n; ++i) {
    if (certainly_less(roots[i - 1] - roots[i], delta)) {
      throw DomainError("trace_root_curves: roots must be descending with gaps >= delta");
    }
  }

  CurveFamily family;
  family.d = d;
  family.delta = delta;
  family.source_roots.assign(roots.begin(), roots.end());
  family.grid = make_grid(options.grid, delta);

  const Tracer tracer{roots, delta, d, options};
  const long columns = static_cast<long>(family.grid.size());
  std::vector<Column> solved(columns);
  std::vector<std::string> errors(columns);
#pragma omp parallel for schedule(dynamic) if (options.parallel)
  for (long i = 0; i < columns; ++i) {
    try {
      solved[i] = tracer.solve(family.grid[i]);
    } catch (const std::exception& err) {
      errors[i] = err.what();
    }
  }
  for (const auto& e : errors) {
    if (!e.empty()) throw PrecisionExhausted(e);
  }

  family.branches.resize(n + d);
  for (int k = 1; k <= n + d; ++k) {
    RootCurve& c = family.branches[k - 1];
    c.k = k;
    c.domain = k <= d ? CurveDomain::NegAxis : (k <= n ? CurveDomain::FullLine : CurveDomain::PosAxis);
  }

  const auto split = static_cast<std::size_t>(columns / 2);
  for (int side = 0; side < 2; ++side) {
    const std::size_t begin = side == 0 ? 0 : split;
    const std::size_t end = side == 0 ? split : static_cast<std::size_t>(columns);
    std::vector<Column> done{solved[begin]};
    for (std::size_t i = begin + 1; i < end; ++i) tracer.bridge(done, solved[i], 0);
    const int offset = side == 0 ? 0 : d;
    for (const Column& col : done) {
      for (int r = 0; r < n; ++r) family.branches[offset + r].samples.push_back({col.x, col.t[r]});
    }
  }
  return family;
}

namespace {

std::map<double, const Real*> index_samples(const RootCurve& curve) {
  std::map<double, const Real*> out;
  for (const auto& s : curve.samples) out[s.x.to_double()] = &s.t;
  return out;
}

const Real* lookup(const std::vector<std::map<double, const Real*>>& idx, int k, double x) {
  if (k < 1 || k > static_cast<int>(idx.size())) return nullptr;
  const auto& m = idx[k - 1];
  const auto it = m.find(x);
  return it == m.end() ? nullptr : it->second;
}

}  // namespace

InterlacingReport check_interlacing(const CurveFamily& upper, const CurveFamily& lower) {
  if (upper.d != lower.d + 1) throw GridMismatch("check_interlacing: degrees must differ by one");
  if (upper.grid.size() != lower.grid.size() || upper.source_roots.size() != lower.source_roots.size() ||
      !upper.delta.overlaps(lower.delta)) {
    throw GridMismatch("check_interlacing: families built on different grids or data");
  }
  for (std::size_t i = 0; i < upper.grid.size(); ++i) {
    if (upper.grid[i].to_double() != lower.grid[i].to_double()) {
      throw GridMismatch("check_interlacing: grid points differ");
    }
  }
  std::vector<std::map<double, const Real*>> up, lo;
  for (const auto& b : upper.branches) up.push_back(index_samples(b));
  for (const auto& b : lower.branches) lo.push_back(index_samples(b));

  InterlacingReport report;
  const int count = static_cast<int>(upper.branches.size());
  const Real& delta = upper.delta;
  for (const Real& xr : upper.grid) {
    const double x = xr.to_double();
    for (int k = 1; k <= count - 1; ++k) {
      const Real* mid = lookup(lo, k, x);
      if (mid == nullptr) continue;
      const Real* left = lookup(up, k + 1, x);
      const Real* right = lookup(up, k, x);
      if (left != nullptr) {
        ++report.checked;
        const Real lhs = *left + delta;
        if (certainly_less(*mid, lhs)) {
          report.violations.push_back({xr, k, "tau_{d,k+1} + delta <= tau_{d-1,k}"});
        } else if (!certainly_less_equal(lhs, *mid)) {
          ++report.unresolved;
        }
      }
      if (right != nullptr) {
        ++report.checked;
        if (certainly_less(*right, *mid)) {
          report.violations.push_back({xr, k, "tau_{d-1,k} <= tau_{d,k}"});
        } else if (!certainly_less_equal(*mid, *right)) {
          ++report.unresolved;
        }
      }
    }
  }
  return report;
}

bool LimitReport::ok() const {
  return std::all_of(entries.begin(), entries.end(), [](const LimitEntry& e) { return e.pass; });
}

LimitReport check_limits(const CurveFamily& family, const Real& x_far, const Real& tol, double escape_factor) {
  LimitReport report;
  const int n = static_cast<int>(family.source_roots.size());
  const int d = family.d;
  const double far = x_far.to_double();
  auto nearest = [&](double target) {
    const Real* best = nullptr;
    for (const auto& x : family.grid) {
      if (best == nullptr || std::abs(x.to_double() - target) < std::abs(best->to_double() - target)) best = &x;
    }
    return *best;
  };
  std::vector<std::map<double, const Real*>> idx;
  for (const auto& b : family.branches) idx.push_back(index_samples(b));

  const Real left = nearest(-far), right = nearest(far);
  const Real dd = family.delta * Real(d, family.delta.precision());
  for (int k = 1; k <= n; ++k) {
    if (const Real* t = lookup(idx, k, left.to_double())) {
      const Real& target = family.source_roots[k - 1];
      report.entries.push_back({k, left, *t, target, false, certainly_less_equal(abs(*t - target), tol)});
    }
  }
  for (int k = d + 1; k <= n + d; ++k) {
    if (const Real* t = lookup(idx, k, right.to_double())) {
      const Real target = family.source_roots[k - d - 1] - dd;
      report.entries.push_back({k, right, *t, target, false, certainly_less_equal(abs(*t - target), tol)});
    }
  }
  if (d > 0) {
    const Real margin = dd * Real::from_double(escape_factor);
    double neg_inner = -INFINITY, pos_inner = INFINITY;
    for (const auto& x : family.grid) {
      const double v = x.to_double();
      if (v < 0) neg_inner = std::max(neg_inner, v);
      if (v > 0) pos_inner = std::min(pos_inner, v);
    }
    const Real up_threshold = family.source_roots.front() + margin;
    const Real down_threshold = family.source_roots.back() - margin;
    for (int k = 1; k <= d; ++k) {
      if (const Real* t = lookup(idx, k, neg_inner)) {
        report.entries.push_back(
            {k, Real::from_double(neg_inner), *t, up_threshold, true, certainly_greater(*t, up_threshold)});
      }
    }
    for (int k = n + 1; k <= n + d; ++k) {
      if (const Real* t = lookup(idx, k, pos_inner)) {
        report.entries.push_back(
            {k, Real::from_double(pos_inner), *t, down_threshold, true, certainly_less(*t, down_threshold)});
      }
    }
  }
  return report;
}

void write_curves_csv(const CurveFamily& family, std::ostream& out, int digits) {
  out << "x,branch_k,t,d\n";
  for (const auto& branch : family.branches) {
    for (const auto& s : branch.samples) {
      out << to_decimal(s.x, digits) << ',' << branch.k << ',' << to_decimal(s.t, digits) << ',' << family.d << '\n';
    }
  }
}

std::vector<Real> laguerre_root_set(int d, const Real& nu, const Real& scale, int precision) {
  const IntervalPolynomial q = laguerre_poly(d, nu.with_precision(precision));
  const RootIsolation iso = isolate_real_roots(q, mul_2exp(Real(1, precision), 20 - precision));
  if (iso.status != IsolationStatus::Complete || iso.certified_count != d) {
    throw PrecisionExhausted("laguerre_root_set: could not isolate all roots");
  }
  std::vector<Real> out;
  for (auto it = iso.intervals.rbegin(); it != iso.intervals.rend(); ++it) {
    out.push_back(it->enclosure * scale.with_precision(precision));
  }
  return out;
}

}  // namespace hyperlp
