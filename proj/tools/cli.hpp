#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace orbitref::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitParse = 2;
inline constexpr int kExitNotSplit = 3;
inline constexpr int kExitBudget = 4;
inline constexpr int kExitInternal = 5;

inline constexpr const char* kVersion = "0.1.0";

/// Runs one command line (without the program name). Reports go to `out`,
/// diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace orbitref::cli
