#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace loopblocks::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command. `args` excludes the program name. Results go to `out` as
/// JSON; failures go to `err` as {"error": "..."} with exit code 1 (domain)
/// or 2 (usage, unreadable or malformed input). `in` backs the "-" input.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace loopblocks::cli
