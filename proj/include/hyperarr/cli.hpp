#pragma once

#include <iosfwd>

namespace hyperarr {

/// Exit codes of the command-line tool.
enum ExitCode : int {
    kExitOk = 0,
    kExitValidation = 1,
    kExitResource = 2,
    kExitInvariant = 3,
};

/// Entry point of the `hyperarr` tool; writes results to `out`, diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hyperarr
