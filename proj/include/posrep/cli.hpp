#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace posrep::cli {

enum ExitCode : int {
  kHolds = 0,           ///< property holds / object produced
  kFails = 1,           ///< property fails; the report carries the witness
  kUsageError = 2,      ///< bad arguments or malformed input
  kBudgetExceeded = 3,
};

/// Runs one invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace posrep::cli
