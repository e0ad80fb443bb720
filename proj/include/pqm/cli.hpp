#pragma once

// Command-line front end: `eval`, `verify` and `scan`.

#include <ostream>
#include <string>
#include <vector>

namespace pqm::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitDomainError = 1,   // bad flags, unknown names, violated preconditions
  kExitNotConverged = 2,  // a record was produced but did not meet its tolerance
  kExitCheckFailed = 3,   // `verify` ran to completion and some check failed
};

// Runs one command line. `args` excludes the program name. Records go to
// `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pqm::cli
