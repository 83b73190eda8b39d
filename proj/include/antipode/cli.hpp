#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace antipode {

enum ExitCode : int { kExitPass = 0, kExitInternal = 1, kExitBadInput = 2, kExitInfeasible = 3, kExitVerifyFailed = 4 };

/// Runs one command line (args exclude the program name) and returns its exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace antipode
