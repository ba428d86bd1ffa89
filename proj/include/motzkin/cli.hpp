#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace motzkin {

/// Runs the command line (without the program name). Returns 0 on success,
/// 1 on an invalid object or a failed verification, 2 on a usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace motzkin
