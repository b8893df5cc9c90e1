#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hcolor::cli {

// Exit codes shared by every subcommand.
inline constexpr int kEstablished = 0;
inline constexpr int kNegative = 1;
inline constexpr int kUsage = 2;
inline constexpr int kResourceLimit = 3;

/// Runs one command line (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hcolor::cli
