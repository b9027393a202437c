#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hfk::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kInvalidInput = 1,
  kSearchExhausted = 2,
  kVerificationFailed = 3,
};

/// Runs the command line `args` (without the program name), writing normal
/// output to `out` and diagnostics to `err`. Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hfk::cli
