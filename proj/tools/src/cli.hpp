#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gyroball {

enum ExitCode : int {
  kExitOk = 0,
  kExitCheckFailed = 1,
  kExitUsage = 2,
  kExitDomain = 3,
  kExitSvgDimension = 4,
};

/// Runs the gyroball command line. argv[0] is the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gyroball
