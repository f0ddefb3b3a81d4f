#ifndef HYPERLP_HARNESS_HPP
#define HYPERLP_HARNESS_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "hyperlp/real.hpp"
#include "json.hpp"

namespace hyperlp {

using Json = nlohmann::ordered_json;

/// Pass and Fail count toward a suite's verdict; Undetermined means the
/// precision cap was reached; Recorded cases are observations outside the
/// proved range and carry no pass/fail weight.
enum class CaseOutcome { Pass, Fail, Undetermined, Recorded };
std::string to_string(CaseOutcome outcome);

struct CaseResult {
  std::string key;
  CaseOutcome outcome = CaseOutcome::Undetermined;
  Json detail = Json::object();
};

struct SuiteReport {
  std::string suite_id;
  Json config = Json::object();
  std::vector<CaseResult> cases;  // sorted by key

  long run() const;
  long passed() const;
  long undetermined() const;
  long failed() const;
  long recorded() const;
  std::vector<const CaseResult*> failures() const;

  /// {suite_id, config, cases:[{key, verdict, detail}], summary}.
  Json to_json() const;
  std::string dump(int indent = 2) const;
};

/// Shared knobs.  `jobs` <= 0 uses the OpenMP default; `parallel = false`
/// runs the serial reference path.
struct HarnessOptions {
  int precision = kDefaultPrecision;
  int max_precision = kMaxPrecision;
  bool parallel = true;
  int jobs = 0;
};

struct DeltaDifferenceConfig {
  long trials = 1000;
  int max_degree = 10;
  std::vector<mpq_class> deltas{mpq_class(1, 10), mpq_class(1, 2), mpq_class(1)};
  std::uint64_t seed = 42;
  bool edge_cases = true;
};

/// For random delta-hyperbolic f and x != 0, g(t) = e^(delta x) f(t + delta) - f(t)
/// must be delta-hyperbolic with a root in every [t_{k+1}, t_k - delta] and
/// its extra root below t_n - delta (x > 0) or above t_1 (x < 0).
SuiteReport suite_delta_difference(const DeltaDifferenceConfig& config, const HarnessOptions& options = {});

struct OnoGridConfig {
  std::vector<mpq_class> alphas{mpq_class(1, 4), mpq_class(1, 2), mpq_class(1), mpq_class(5, 4), mpq_class(149, 100)};
  long n_max = 50;
  int d_max = 12;
};

/// Jensen polynomials of R_alpha(n..n+d), their delta = 1 exponential form,
/// and the direct Bessel-Clifford form with delta = pi^2 alpha / 6.  Cases
/// with alpha > 3/2 are recorded only.
SuiteReport suite_ono_grid(const OnoGridConfig& config, const HarnessOptions& options = {});

enum class LpFunction { BesselClifford, Gaussian, ReciprocalGamma };

struct LpEmbeddingConfig {
  LpFunction function = LpFunction::BesselClifford;
  mpq_class parameter = mpq_class(3, 2);  // nu, or beta; unused for 1/Gamma
  mpq_class t0 = 0;
  mpq_class delta = 1;
  int d_max = 12;
};

/// Jensen polynomials of a_k = f(t0 + k delta).  Throws SignChangeDetected
/// when the samples change sign.
SuiteReport suite_lp_embedding(const LpEmbeddingConfig& config, const HarnessOptions& options = {});

struct GaussianConfig {
  mpq_class beta = mpq_class(1, 2);
  int d_max = 15;
  int recursion_points = 20;
  std::uint64_t seed = 7;
};

/// g_d(x) = sum_k (-1)^(d-k) C(d,k) e^(-beta k^2 + kx): d real zeros, gaps at
/// least 2 beta, and g_{d+1}(x) = e^(x - beta) g_d(x - 2 beta) - g_d(x).
SuiteReport suite_gaussian(const GaussianConfig& config, const HarnessOptions& options = {});

struct LaguerreDeltaConfig {
  mpq_class nu = 0;
  std::vector<mpq_class> deltas{mpq_class(1, 4), mpq_class(1, 2), mpq_class(3, 4), mpq_class(1)};
  int d_max = 10;
};

/// Jensen polynomials of a_k = 1/Gamma(delta (nu + 1 + k)); at delta = 1 the
/// coefficients are compared with L_d^nu(-x) d! / Gamma(d + nu + 1).  The
/// alternative sampling 1/Gamma(nu + 1 + delta k) is recorded alongside.
SuiteReport suite_laguerre_delta(const LaguerreDeltaConfig& config, const HarnessOptions& options = {});

struct ZerosConfig {
  std::vector<mpq_class> nus{mpq_class(1, 2), mpq_class(3, 2), mpq_class(5, 2)};
  int count = 20;
};

/// Consecutive zeros of C_nu more than pi^2/4 apart; closed form at nu = 1/2.
SuiteReport suite_zeros(const ZerosConfig& config, const HarnessOptions& options = {});

/// Text form of an exact rational for keys and configs ("3/2", "1").
std::string rational_string(const mpq_class& q);

}  // namespace hyperlp

#endif  // HYPERLP_HARNESS_HPP
