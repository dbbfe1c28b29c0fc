#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace holder {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitViolation = 2,
};

/// Entry point of the `holder` command line tool. `args` excludes the
/// program name. Returns the process exit status.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace holder
