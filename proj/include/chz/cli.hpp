#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace chz {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitComputation = 1,
  kExitUsage = 2,
  kExitMethodShape = 3,
  kExitUnknownForcing = 4,
  kExitBlowUp = 5,
};

/// Runs the tool on `args` (args[0] is the program name). Results go to `out`,
/// diagnostics to `err`; stdin is read when a matrix path is "-".
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace chz
