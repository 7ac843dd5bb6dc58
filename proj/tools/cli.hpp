#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace walkinv::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitCheckFailure = 1;
inline constexpr int kExitInputError = 2;

/// Runs the command line `args` (without the program name), writing reports
/// to `out` and diagnostics to `err`. Returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace walkinv::cli
