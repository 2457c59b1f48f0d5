#pragma once

#include <iosfwd>

namespace chromabound {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,
  kExitInputError = 2,
  kExitImproperColoring = 3,
  kExitOracleTimeout = 4,
};

/// Entry point of the `chromabound` tool (subcommands bound, reverse, chi,
/// compare, gen). Writes to `out`/`err` instead of the process streams so
/// tests can drive it in-process.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace chromabound
