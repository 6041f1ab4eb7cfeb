#pragma once

#include <ostream>

namespace fuzzcal::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 2,    ///< bad arguments, unreadable or invalid input
  kMath = 3,     ///< the computation itself failed
};

/// Entry point of the `fuzzcal` tool; argv[0] is the program name.
/// Normal output goes to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace fuzzcal::cli
