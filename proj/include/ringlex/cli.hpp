#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ringlex {

// Exit codes of the command-line tool.
enum ExitCode : int {
    kExitOk = 0,
    kExitFixtureFailed = 1,
    kExitParse = 2,
    kExitInvalidBasis = 3,
    kExitCap = 4,  // also: distance of the zero code in `gray`
    kExitNonMultiplicative = 5,
};

// Runs the tool on args (without the program name), writing results to out
// and diagnostics to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Directory of the bundled table fixtures, fixed at build time.
std::string default_fixture_dir();

}  // namespace ringlex
