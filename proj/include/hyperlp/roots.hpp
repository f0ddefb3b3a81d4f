#ifndef HYPERLP_ROOTS_HPP
#define HYPERLP_ROOTS_HPP

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hyperlp/polynomial.hpp"
#include "hyperlp/real.hpp"

namespace hyperlp {

enum class RootSign { Any, AllPositive, AllNegative };
enum class IsolationStatus { Complete, Incomplete };
enum class Verdict { Hyperbolic, NotHyperbolic, Undetermined };

std::string to_string(Verdict verdict);
std::string to_string(RootSign sign);

/// An interval holding exactly one distinct real root.  `multiplicity` is 1
/// unless the root was certified through exact arithmetic.
struct IsolatedRoot {
  Real enclosure;
  int multiplicity = 1;
};

/// A region the isolator could not resolve; it holds at most `max_roots`
/// real roots counted with multiplicity (possibly none).
struct RootCluster {
  Real enclosure;
  int max_roots = 0;
};

struct RootIsolation {
  std::vector<IsolatedRoot> intervals;  // ascending, disjoint interiors
  std::vector<RootCluster> clusters;    // unresolved regions, ascending
  int certified_count = 0;              // sum of multiplicities
  IsolationStatus status = IsolationStatus::Complete;
};

struct IsolationOptions {
  /// Use exact rational square-free decomposition when every coefficient is
  /// a point value.  Lets multiple roots be certified with multiplicity.
  bool exact_multiplicity = true;
  /// Bisection depth cap below the root bound; 0 means "precision - 8".
  int max_depth = 0;
};

/// Isolates all real roots of `p`.  Each returned interval has width at most
/// `min_width` and carries a certified sign change; status is Complete when
/// the list is provably exhaustive.
///
/// Throws AmbiguousDegree when the leading coefficient straddles zero and
/// DomainError for the zero polynomial.
RootIsolation isolate_real_roots(const IntervalPolynomial& p, const Real& min_width,
                                 const IsolationOptions& options = {});

/// Rational coefficients (ascending).  Denominators are cleared first, so the
/// coefficients are exact and repeated roots are resolved with multiplicity.
RootIsolation isolate_real_roots(std::span<const mpq_class> coefficients, const Real& min_width,
                                 const IsolationOptions& options = {});

/// Shrinks a bracket known to contain exactly one simple root until its
/// width is at most target_width.  Throws PrecisionExhausted when the sign
/// of p cannot be decided anywhere near the middle of the bracket.
Real refine_root(const IntervalPolynomial& p, const Real& bracket, const Real& target_width);

struct HyperbolicityReport {
  Verdict verdict = Verdict::Undetermined;
  RootIsolation roots;
  std::optional<Real> min_separation;
  int degree = 0;
  int precision_bits = kDefaultPrecision;
  std::string reason;
};

struct CertifyOptions {
  IsolationOptions isolation;
  /// Width the root enclosures are refined to before separation checks.
  double root_width = 0x1p-40;
};

/// Decides whether p has deg(p) real roots (with multiplicity), all of the
/// requested sign, and, when min_sep is given, whether they are simple and
/// pairwise at least min_sep apart.  Degree-0 and zero polynomials are
/// vacuously hyperbolic.
HyperbolicityReport certify_hyperbolic(const IntervalPolynomial& p, RootSign root_sign,
                                       const std::optional<Real>& min_sep = std::nullopt,
                                       const CertifyOptions& options = {});

struct PrecisionPolicy {
  int initial_bits = kDefaultPrecision;
  int max_bits = kMaxPrecision;
};

using PolynomialBuilder = std::function<IntervalPolynomial(int precision)>;

/// Rebuilds the polynomial at doubling precision until the verdict is no
/// longer Undetermined or max_bits is exceeded.
HyperbolicityReport certify_hyperbolic_adaptive(const PolynomialBuilder& build, RootSign root_sign,
                                                const std::optional<Real>& min_sep = std::nullopt,
                                                const PrecisionPolicy& policy = {},
                                                const CertifyOptions& options = {});

/// Adaptive isolation; throws PrecisionExhausted if still Incomplete at
/// max_bits.
RootIsolation isolate_real_roots_adaptive(const PolynomialBuilder& build, double min_width,
                                          const PrecisionPolicy& policy = {},
                                          const IsolationOptions& options = {});

}  // namespace hyperlp

#endif  // HYPERLP_ROOTS_HPP
