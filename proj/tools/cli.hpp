#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace detarr::cli {

// Stable exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitNegative = 2;
inline constexpr int kExitOutOfScope = 3;

/// Runs the command line (without the program name) and returns the exit
/// code. `env_seed` stands in for DETARR_SEED when non-empty.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const std::string& env_seed = {});

}  // namespace detarr::cli
