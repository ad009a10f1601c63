#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gsep::cli {

enum ExitCode : int {
  kOk = 0,
  kInvalidInput = 2,
  kNoThreshold = 3,
  kNumericalFailure = 4,
};

/// Runs the command line `args` (args[0] is the program name) and returns the
/// process exit code. Normal output goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// 12 significant digits, '.' separator regardless of locale; "inf" for
/// infinities and an empty field for NaN.
std::string format_number(double x);

}  // namespace gsep::cli
