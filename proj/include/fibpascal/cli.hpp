#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fibpascal {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitVerification = 3;

// Entry point of the `fibpascal` tool. args[0] is the program name.
// Returns 0 on success, 2 on argument/usage errors, 3 on verification failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fibpascal
