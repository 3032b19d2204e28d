#pragma once

#include <iosfwd>

namespace slideocam::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;  ///< bad arguments, config, or an infeasible design
inline constexpr int kExitSolver = 2;   ///< numerical failure (no root, closure, singularity)

/// Runs one command line. Summaries go to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace slideocam::cli
