#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wellsep {

/// Exit codes of the command-line front end.
enum ExitCode : int {
    kExitOk = 0,
    kExitInputError = 2,
    kExitNonConvergence = 3,
    kExitPrecondition = 4,
};

/// Runs the command line `args` (program name excluded). Tables go to
/// `out` unless --out names a file; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wellsep
