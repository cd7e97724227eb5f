#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fhelix::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitSpecError = 2;   // unreadable file, parse error, bad arguments
inline constexpr int kExitCurveError = 3;  // curve not regular / not of proper order, jet domain errors along it

/// Runs the command line (args excludes the program name). Reports go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fhelix::cli
