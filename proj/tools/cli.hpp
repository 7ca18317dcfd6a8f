#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hardcore {

/// Runs the lab command line. Reports go to `out` (or the --out file), diagnostics to `err`.
/// Returns 0 when every check holds, 2 on a failing verdict, 3 when inconclusive and 1 on
/// usage errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hardcore
