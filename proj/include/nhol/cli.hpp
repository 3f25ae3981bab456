#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nhol {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kExitOk = 0,
  kExitMismatch = 1,   // a check failed or a computation could not finish
  kExitConfig = 2,     // bad arguments or unreadable input
  kExitNotRankOne = 3, // canonicalize only
};

/// Runs the command line `args` (args[0] is the program name) and returns the
/// process exit code. Reports go to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nhol
