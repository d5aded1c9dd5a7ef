#pragma once

#include <iosfwd>

namespace bagcd {

enum ExitStatus : int {
  kExitOk = 0,
  kExitBadFlags = 1,
  kExitBadInput = 2,
  kExitPipelineError = 3,
};

/// Entry point of the `bagcd` tool, with the streams injected so the
/// subcommands can be driven from tests.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace bagcd
