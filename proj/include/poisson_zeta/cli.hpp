#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "poisson_zeta/real.hpp"

namespace poisson_zeta::cli {

enum ExitCode : int {
  kSuccess = 0,
  kValidationFailure = 1,
  kUsageError = 2,
  kConditioningError = 3,
  kResourceError = 4,
};

inline constexpr long kMaxPrecisionBits = 8192;

/// Decimal text for x rounded to `precision_bits`: 17 significant digits at
/// 53 bits, the shortest string MPFR guarantees to round-trip otherwise.
std::string format_number(const Real& x, long precision_bits);

/// Runs `pzeta` with `args` (program name excluded). Records go to `out`,
/// diagnostics to `err`; the return value is the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace poisson_zeta::cli
