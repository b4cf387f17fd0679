// SPDX-License-Identifier: MIT
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace stablek {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitYes = 0,
  kExitNo = 1,
  kExitUsage = 2,
  kExitCap = 3,
};

/// Runs one command line (without the program name). Reports go to `out`,
/// diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace stablek
