#ifndef HYPERLP_CLI_HPP
#define HYPERLP_CLI_HPP

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "hyperlp/real.hpp"

namespace hyperlp::cli {

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kUsage = 2, kPrecisionExhausted = 3 };

/// Runs one command line.  `args` excludes the program name.  Results go to
/// `out` (or to --out), diagnostics and the synopsis to `err`.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Exact rational from "3/2", "-0.25", "1e-3" or "1.5e2/7".
mpq_class parse_rational(std::string_view text);

/// Numeric argument at the given precision.  Besides rationals it accepts
/// pi, pi2 (= pi^2), pi^2, e, multiples such as 2pi, a divisor as in
/// pi2/6, and the "v ± r" ball form printed by the tool itself.
Real parse_value(std::string_view text, int precision);

/// Working precision when --precision is not given: HYPERLP_PRECISION if set
/// and valid, otherwise the library default.
int default_precision();

}  // namespace hyperlp::cli

#endif  // HYPERLP_CLI_HPP
