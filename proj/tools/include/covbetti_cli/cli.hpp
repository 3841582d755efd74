#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace covbetti::cli {

/// Process exit codes of the command-line tool.
enum ExitCode : int {
    kOk = 0,
    kUsage = 1,
    kParse = 2,
    kResourceCap = 3,
    kCounterexample = 4,
};

/// Runs the tool on `args` (without the program name), reading graphs from
/// `in` when no other source is given.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace covbetti::cli
