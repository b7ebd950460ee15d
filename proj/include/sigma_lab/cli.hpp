#pragma once

#include <string>
#include <vector>

namespace sigmalab {

/// Entry point behind the sigma-lab binary. `args` excludes the program
/// name. Exit codes: 0 success (and zero failing verdicts), 1 usage or input
/// error, 2 at least one failing verdict (counterexample found).
int run_cli(const std::vector<std::string>& args);

}  // namespace sigmalab
