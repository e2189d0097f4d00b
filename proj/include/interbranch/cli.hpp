#pragma once

#include <iosfwd>

namespace interbranch {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,    // bad arguments or I/O failure
  kExitFailed = 2,   // a verdict or verification claim failed
};

/// Entry point for the `interbranch` tool. Data goes to `out`, diagnostics
/// to `err`.
int run_cli(int argc, char const* const* argv, std::ostream& out, std::ostream& err);

}  // namespace interbranch
