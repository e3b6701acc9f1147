#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace casimir::cli {

enum ExitCode : int {
    kSuccess = 0,
    kUsageError = 1,
    kNumericalFailure = 2,
};

/// Runs the `casimir` command line. `args` excludes the program name.
/// Results go to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace casimir::cli
