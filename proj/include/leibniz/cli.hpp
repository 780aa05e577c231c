#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace leibniz::cli {

enum ExitCode : int { kPass = 0, kFailure = 1, kUsage = 2 };

/// Runs one command line (without the program name). Reports go to `out`
/// unless --output is given; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace leibniz::cli
