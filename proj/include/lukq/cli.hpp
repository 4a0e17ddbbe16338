#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lukq::cli {

enum ExitCode : int {
  kOk = 0,
  kValidationError = 1,
  kNumericalError = 2,
  kConditionFailed = 3,
};

/// Runs the command line `args` (args[0] is the program name). Results go
/// to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lukq::cli
