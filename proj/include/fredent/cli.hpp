#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace fredent::cli {

// Runs one CLI invocation. `args` excludes the program name. All human
// output goes to `out`, diagnostics to `err`. Returns the process exit
// code: 0 success / majorization holds / expected claim status; 1
// majorization fails; 2 validation or usage error; 3 determinant route
// disagreement; 4 unexpected claim status.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace fredent::cli
