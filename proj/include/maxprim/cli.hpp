#pragma once

#include <iosfwd>

namespace maxprim::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitRefused = 3;

/// Entry point of the `maxprim` tool; data goes to `out`, diagnostics and
/// progress to `err`. Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace maxprim::cli
