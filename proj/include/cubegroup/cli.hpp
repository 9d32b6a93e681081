#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cubegroup {

/// Exit codes of the command-line tool.
enum ExitCode : int { kExitPass = 0, kExitCheckFailure = 1, kExitUsage = 2 };

/// Runs the tool on `args` (without the program name):
///   verify [--json] [--seed N] [--trials N] [--filter GLOB]...
///   apply <2|3> "<word>"
///   order {g2|g3|corner-group|edge-group|P}
///   mdim {g2|g3|abelian <group>|exceptional}
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cubegroup
