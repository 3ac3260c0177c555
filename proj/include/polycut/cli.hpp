#ifndef POLYCUT_CLI_HPP
#define POLYCUT_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace polycut {

enum ExitCode : int {
  kExitOk = 0,
  kExitCheckFailed = 1,
  kExitInvalidInput = 2,
};

/// Runs the command line front end. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace polycut

#endif  // POLYCUT_CLI_HPP
