#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cycid {

/// Process exit codes.
enum ExitCode : int {
    kHolds = 0,      // holds / accepted
    kFails = 1,      // fails / rejected / disagreement
    kUsage = 2,      // usage or parse error, malformed certificate
    kBudget = 3,     // oracle budget exceeded
    kIoError = 4,
};

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cycid
