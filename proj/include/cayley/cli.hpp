#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cayley::cli {

/// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitPropertyViolation = 1;
inline constexpr int kExitUsage = 2;

/// Runs one CLI invocation. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cayley::cli
