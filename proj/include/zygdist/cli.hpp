#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace zyg {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitInconclusive = 3;

/// Runs one subcommand (args[0] is the program name). Reports go to `out`
/// unless --out names a file; diagnostics go to `err`.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace zyg
