#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tourn::cli {

/// Exit codes: 0 success, 1 negative result (container absent, certification
/// failure), 2 invalid arguments or unreadable input.
inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitUsage = 2;

/// Runs one invocation; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tourn::cli
