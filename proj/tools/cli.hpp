#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hdense::cli {

enum ExitCode : int {
    kOk = 0,
    kInternal = 1,
    kBadInput = 2,        // parse or configuration error
    kBoundViolation = 3,  // --assert-bounds found a failed check
    kResourceLimit = 4,   // size guard, out of memory
};

/// Runs one command line (without the program name). Everything the command
/// prints goes to out, diagnostics to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hdense::cli
