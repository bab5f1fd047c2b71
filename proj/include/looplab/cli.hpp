#pragma once

#include <ostream>

namespace looplab::cli {

inline constexpr const char* kVersion = "0.1.0";

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitGate = 2;
inline constexpr int kExitRuntime = 3;

/// Entry point for the `looplab` command line. Returns the process exit code: 0 success,
/// 1 usage error, 2 an acceptance gate failed, 3 numerical failure.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace looplab::cli
