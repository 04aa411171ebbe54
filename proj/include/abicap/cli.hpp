#pragma once

#include <iosfwd>

namespace abicap {

inline constexpr int kExitOk = 0;
inline constexpr int kExitRuntime = 1;
inline constexpr int kExitUsage = 2;

/// Environment variable naming the default output directory.
inline constexpr const char* kOutDirEnv = "ABICAP_OUT_DIR";

/// Entry point behind the `abicap` executable.
///
///   abicap list-scenarios
///   abicap run <scenario-id | config-file> [--seed N] [--out DIR]
///              [--set key=value]... [--plot]
///
/// Returns 0 on success, 2 on usage or configuration errors, 1 on runtime
/// failures such as unwritable output.
int parse_and_dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace abicap
