#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace clhs::cli {

// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kValidationFailure = 1,
  kRetryExhausted = 2,
  kIoError = 3,
};

// Runs the command line `args` (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace clhs::cli
