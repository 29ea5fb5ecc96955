#pragma once

#include <iosfwd>

namespace schubert::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitCounterexample = 2;
inline constexpr int kExitBudget = 3;

/// Runs the `schubert` command line (argv[0] is the program name).
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace schubert::cli
