#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace river::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kViolation = 1;  // certified violation, criterion fails, no decomposition
inline constexpr int kUsage = 2;      // bad arguments or unparsable input
inline constexpr int kUndecided = 3;  // window-limited or undecidable

inline constexpr unsigned long long kDefaultSeed = 20090801ULL;

/// Runs one command line (args excludes the program name). JSON results go
/// to out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace river::cli
