#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cml {

// Command-line front end. `args` holds everything after the program name.
// Returns 0 on success, 1 when a requested check does not hold, 2 on usage,
// parse or input errors. Output for fixed inputs is deterministic.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace cml
