#ifndef HYPERLP_CURVES_HPP
#define HYPERLP_CURVES_HPP

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "hyperlp/polynomial.hpp"
#include "hyperlp/real.hpp"

namespace hyperlp {

enum class CurveDomain { NegAxis, FullLine, PosAxis };
std::string to_string(CurveDomain domain);

struct CurveSample {
  Real x;
  Real t;
};

struct RootCurve {
  int k = 0;  // 1-based, ordered by decreasing t
  CurveDomain domain = CurveDomain::FullLine;
  std::vector<CurveSample> samples;  // increasing x
};

/// Geometric grid in |x| on both sides of 0, in units of 1/delta.
struct GridSpec {
  double inner = 0.05;
  double outer = 10.0;
  int points_per_side = 48;
};

std::vector<Real> make_grid(const GridSpec& spec, const Real& delta);

struct TraceOptions {
  GridSpec grid;
  int precision = kDefaultPrecision;
  double root_width = 0x1p-60;
  /// Step halvings allowed between two columns before giving up.
  int max_halvings = 10;
  bool parallel = true;
};

struct CurveFamily {
  int d = 0;
  Real delta;
  std::vector<Real> source_roots;  // t_1 > ... > t_n
  std::vector<Real> grid;          // every x column used, ascending
  std::vector<RootCurve> branches;  // k = 1..n+d
};

/// A_d(t; x) = delta^-d sum_k C(d,k) (-1)^(d-k) e^(k delta x) f(t + k delta)
/// for f(t) = prod (t - t_j): a polynomial of degree n in t for fixed x != 0.
IntervalPolynomial appell_in_t(std::span<const Real> roots, const Real& delta, int d, const Real& x);

/// Traces tau_{d,k}(x) for the delta-hyperbolic polynomial with the given
/// roots (strictly descending, gaps >= delta) and 0 <= d <= n.  For x < 0
/// the n zeros are branches 1..n, for x > 0 branches d+1..n+d.
///
/// Throws DomainError on invalid input, BranchJumpDetected when a column
/// cannot be matched to its neighbour after max_halvings step halvings, and
/// PrecisionExhausted when a column does not certify n simple zeros.
CurveFamily trace_root_curves(std::span<const Real> roots, const Real& delta, int d,
                              const TraceOptions& options = {});

struct InterlacingViolation {
  Real x;
  int k = 0;
  std::string inequality;
};

struct InterlacingReport {
  long checked = 0;
  long unresolved = 0;  // neither side certain within the radii
  std::vector<InterlacingViolation> violations;
  bool ok() const { return violations.empty(); }
};

/// tau_{d,k+1}(x) + delta <= tau_{d-1,k}(x) <= tau_{d,k}(x) wherever all
/// branches involved are defined.  Throws GridMismatch unless both families
/// share delta and grid.
InterlacingReport check_interlacing(const CurveFamily& upper, const CurveFamily& lower);

struct LimitEntry {
  int k = 0;
  Real x;
  Real t;
  Real target;  // expected limit, or the escape threshold
  bool escape = false;
  bool pass = false;
};

struct LimitReport {
  std::vector<LimitEntry> entries;
  bool ok() const;
};

/// Finite limits at the grid columns closest to -x_far and +x_far, within
/// tol, and escape of the divergent branches beyond
/// t_1 + escape_factor d delta (x -> 0-) or t_n - escape_factor d delta
/// (x -> 0+) at the columns nearest 0.
LimitReport check_limits(const CurveFamily& family, const Real& x_far, const Real& tol, double escape_factor = 10.0);

/// CSV with header x,branch_k,t,d; values are midpoints.
void write_curves_csv(const CurveFamily& family, std::ostream& out, int digits = 20);

/// Roots of L_d^nu(-t / scale), descending.
std::vector<Real> laguerre_root_set(int d, const Real& nu, const Real& scale, int precision = kDefaultPrecision);

}  // namespace hyperlp

#endif  // HYPERLP_CURVES_HPP
