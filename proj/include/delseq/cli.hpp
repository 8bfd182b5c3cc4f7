#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace delseq {

/// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitBadArgs = 2;
inline constexpr int kExitSizeCap = 3;

/// Runs the tool on `args` (program name excluded), writing tables to `out`
/// and diagnostics to `err`. Returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace delseq
