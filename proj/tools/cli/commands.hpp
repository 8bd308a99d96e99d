#pragma once

#include <ostream>

namespace ordseason::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitUsage = 2;

// Parses argv and runs one subcommand. Reports go to `out` unless --output is
// given; diagnostics go to `err`. Never throws.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ordseason::cli
