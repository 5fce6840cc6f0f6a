#pragma once

#include <iosfwd>

namespace linebal {

/// Entry point of the `linebal` tool (subcommands gen, solve, compare).
/// Returns the process exit code; no output file is left behind on failure.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace linebal
