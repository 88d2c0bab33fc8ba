#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ramsey::cli {

/// Exit statuses shared by all subcommands.
enum ExitCode : int {
  kOk = 0,
  kUnverified = 1,
  kParameterError = 2,
  kBudgetAbort = 3,
};

/// Cache directory override for the census cache.
inline constexpr const char* kCacheEnvVar = "RAMSEY_CACHE_DIR";

/// Runs one command line (without the program name). Artifacts go to files or `out`; diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ramsey::cli
