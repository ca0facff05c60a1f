#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace g2vir::cli {

/// Exit codes.
inline constexpr int kExitPass = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command. Reports go to `out` (or the --out file) as one JSON
/// object per line; usage text and diagnostics go to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
/// Same, with the arguments after the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace g2vir::cli
