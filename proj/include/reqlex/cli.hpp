#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace reqlex::cli {

enum ExitCode : int { kOk = 0, kInputError = 1, kUsageError = 2 };

/// Runs the command line `reqlex <args...>` (program name excluded). Documents
/// go to `out` unless --out is given; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace reqlex::cli
