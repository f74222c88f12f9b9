#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace oksphere {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitNumerical = 2,
  kExitVerification = 3,
};

/// Runs the tool on `args` (without the program name). Results go to `out`
/// unless an --out file is given; diagnostics go to `err`.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace oksphere
