#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace kstep::cli {

/// Exit codes of run().
enum ExitCode : int {
    kOpaque = 0,
    kNotOpaque = 1,
    kUsageError = 2,
};

/// Runs the command line `args` (args[0] is the program name). Regular
/// output goes to `out`, diagnostics to `err`.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace kstep::cli
