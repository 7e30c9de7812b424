#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tg::cli {

enum ExitCode : int {
  kOk = 0,
  kInputError = 1,
  kConstraintViolation = 2,
  kMismatch = 3,
};

/// Runs the command line `args` (without the program name), writing the
/// report to `out` and diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tg::cli
