#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace knotchar {

/// Runs one invocation; args excludes the program name. Exit code 0 on
/// success, 2 when the result regime is refused, 1 on any error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace knotchar
