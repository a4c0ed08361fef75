#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace curv::cli {

/// Exit codes emitted by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;  // not positively curved, unmatched set, or violations found
inline constexpr int kExitError = 2;

/// Runs the command line given as argv-style strings (args[0] is the
/// program name). Normal output goes to `out` unless --out names a file;
/// diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace curv::cli
