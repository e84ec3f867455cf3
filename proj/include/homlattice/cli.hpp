#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace homlattice::cli {

// Exit statuses of the command-line tool.
enum ExitCode : int {
  ok = 0,
  usage = 1,
  parse_failure = 2,
  limit_failure = 3,
  check_failure = 4,  // perm-gadget --check found a mismatch
  internal_failure = 5,
};

// Runs the tool on args (args[0] is the program name). Answers go to out,
// diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace homlattice::cli
