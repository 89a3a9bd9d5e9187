#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace heatcouple::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitSolver = 2;

/// Entry point shared by main() and the tests. `args` excludes the program name.
/// Subcommands: run, compare, convergence.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace heatcouple::cli
