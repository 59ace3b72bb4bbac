#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace lgkkp {

enum ExitCode : int { ExitPass = 0, ExitMathFailure = 1, ExitUsage = 2 };

/// Runs one invocation. `args` excludes the program name. Output goes to
/// `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lgkkp
