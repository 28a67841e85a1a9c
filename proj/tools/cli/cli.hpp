#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace deduce::cli {

// Exit codes of the deduce tool.
inline constexpr int kExitOk = 0;       // success, valid, tautology
inline constexpr int kExitInvalid = 1;  // invalid, not a tautology, not achievable
inline constexpr int kExitUsage = 2;    // usage or parse error

// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace deduce::cli
