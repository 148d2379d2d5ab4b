#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace liou::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_usage = 1;        ///< parse or usage error
inline constexpr int exit_precondition = 2; ///< zero input, resource limits, ...
inline constexpr int exit_internal = 3;     ///< a witness failed verification

/// Runs the command line `args` (without the program name). Reports go to
/// `out`; in human-readable mode diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace liou::cli
