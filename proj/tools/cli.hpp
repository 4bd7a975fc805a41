#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace c4free::cli {

/// Exit codes: 0 success, 1 invalid result (failed verification), 2 usage,
/// input or precondition errors. Diagnostics go to `err` as one line
/// prefixed "error: <category>: ".
inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace c4free::cli
