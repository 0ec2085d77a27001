#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace formale::cli {

enum ExitCode : int {
    kOk = 0,
    kCongruenceFailure = 1,
    kInvalidCurve = 2,
    kParseError = 3,
    kInsufficientOrder = 4,
};

/// Runs one command line (args excludes the program name) and returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace formale::cli
