#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace clifford3 {

/// Runs the clifford3 command line with `args` (program name excluded).
/// Results go to `out`, JSON errors to `err`. Returns 0 on success and 2 on any
/// validation or usage error. CLIFFORD3_OUTPUT=json|csv overrides the
/// per-command output format.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace clifford3
