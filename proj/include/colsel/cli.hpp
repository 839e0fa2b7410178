#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace colsel {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 2,
  kExitData = 3,
  kExitNumerical = 4,
};

/// Runs one CLI invocation. `args` excludes the program name. Standard input
/// is only read by `eval` when no --indices file is given.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace colsel
