#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace quiddity {

enum ExitCode : int {
  kExitOk = 0,
  kExitNegative = 1,  // not a solution, engines disagree, ...
  kExitUsage = 2,
  kExitBudget = 3,
};

/// Runs the command line `args` (without the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace quiddity
