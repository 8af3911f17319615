#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace orbitspace::cli {

/// Exit codes of run().
enum Exit : int { kOk = 0, kNegative = 1, kUsage = 2, kInvalidModel = 3 };

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace orbitspace::cli
