#pragma once

#include <ostream>

namespace qwlab {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,       // every requested check passed
  kExitFailed = 1,   // some check failed or the search budget ran out
  kExitUsage = 2,    // bad arguments or unreadable / invalid input
};

/// Entry point of the `qwlab` tool, with injectable streams for testing.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qwlab
