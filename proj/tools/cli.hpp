#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hadclique::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitNothingProduced = 2;
inline constexpr int kExitUsage = 64;

/// Runs one command line (without the program name). Everything the command
/// prints goes to `out` / `err`; the return value is the process exit code.
/// HADCLIQUE_SEED, when set, overrides --rng-seed.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace hadclique::cli
