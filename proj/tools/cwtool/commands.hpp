#ifndef CWTOOL_COMMANDS_HPP
#define CWTOOL_COMMANDS_HPP

#include <ostream>
#include <string>
#include <vector>

namespace cwtool {

enum ExitCode : int {
  exit_ok = 0,
  exit_negative = 1,  // not a weighing matrix, or a failed cross-check
  exit_usage = 2,
};

// Runs one cwtool invocation; `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace cwtool

#endif
