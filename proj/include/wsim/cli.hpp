#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wsim::cli {

/// Exit codes: 0 success or true verdict, 1 false verdict, 2 input error.
enum ExitCode : int { kOk = 0, kFalseVerdict = 1, kInputError = 2 };

/// Runs one invocation. `args` excludes the program name. The report goes to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wsim::cli
