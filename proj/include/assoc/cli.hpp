#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace assoc {

/// Exit statuses of the command-line tool.
enum ExitStatus : int {
  kExitOk = 0,
  kExitNotSatisfied = 1,
  kExitError = 2,
  kExitBudget = 3,
};

/// Runs the tool; args[0] is the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace assoc
