#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace knotbound {

/// Runs one command line (program name first). Exit codes: 0 success, 1 input
/// or parse error, 2 computation guard, 3 internal invariant failure or a
/// failed self-test.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace knotbound
