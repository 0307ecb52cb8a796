#ifndef SENSE_ARBITER_TOOLS_CLI_H_
#define SENSE_ARBITER_TOOLS_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace sense_arbiter::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitData = 2,
};

// Runs the sense-arbiter command line. `args` excludes the program name.
int Run(const std::vector<std::string> &args, std::ostream &out,
        std::ostream &err);

}  // namespace sense_arbiter::cli

#endif  // SENSE_ARBITER_TOOLS_CLI_H_
