#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wg {

// Dispatches one command line (without the program name). Returns 0 on
// success, 1 when a requested check fails, 2 on usage errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wg
