#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qhardy::cli {

/// Exit codes: 0 success, 2 invalid input, 3 numerical failure.
enum ExitCode : int { kOk = 0, kBadInput = 2, kNumerical = 3 };

/// Runs one command; `args` excludes the program name. Reports go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qhardy::cli
