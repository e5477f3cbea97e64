#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace zass {

enum ExitCode : int {
    kExitOk = 0,
    kExitVerifyFailed = 1,
    kExitParse = 2,
    kExitValidation = 3,
    kExitIntegrality = 4,
};

/// Runs the `zass` command line. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace zass
