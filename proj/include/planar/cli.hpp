#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace planar::cli {

enum ExitCode : int {
    exit_ok = 0,
    exit_verification_failed = 1,
    exit_usage = 2,
    exit_resource = 3,
};

// Runs the command line `args` (args[0] is the program name), writing results
// to out and diagnostics to err. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace planar::cli
