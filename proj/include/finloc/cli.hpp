#ifndef FINLOC_CLI_HPP
#define FINLOC_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace finloc {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitInputError = 1,
  kExitIntegrityFailure = 2,
};

/// Runs `finloc <args...>` (program name excluded) and returns the exit code.
int run_cli(const std::vector<std::string> &args, std::ostream &out,
            std::ostream &err);

} // namespace finloc

#endif
