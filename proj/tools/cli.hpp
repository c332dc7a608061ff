#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pickfreeze::cli {

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kFailure = 1;     // evaluation or I/O failure
inline constexpr int kUsage = 2;       // bad flags, config, model or block
inline constexpr int kDegenerate = 3;  // zero-variance sample
inline constexpr int kBudget = 4;      // learning budget cap exceeded

/// Runs one command line. args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pickfreeze::cli
