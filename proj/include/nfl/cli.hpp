#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nfl::cli {

/// Process exit codes.
enum ExitCode : int { kSuccess = 0, kUsageError = 1, kCapacityError = 2 };

/// Runs the `nfl` command line. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nfl::cli
