#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ramify::cli {

/// Exit codes shared by every subcommand.
inline constexpr int kExitTrue = 0;
inline constexpr int kExitFalse = 1;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitInternalError = 3;

/// Runs one command line (without the program name), writing results to
/// `out` and diagnostics to `err`. Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ramify::cli
