#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace kexit::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kVerifyMismatch = 1,
  kUsageError = 2,
  kValidationError = 3,
  kLimitExceeded = 4,
};

/// Runs the command line `args` (without the program name). Data goes to
/// `out`, diagnostics to `err`.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace kexit::cli
