#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace heunconv::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int { kOk = 0, kError = 1, kNoSolution = 2, kExcludedPoint = 3 };

/// Runs the tool on `args` (without the program name), writing results to `out` (or the
/// --output file) and diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace heunconv::cli
