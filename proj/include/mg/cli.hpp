#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mg {

// Runs one CLI invocation. Exit codes: 0 success, 1 the outcome contradicts
// --expect, 2 resource cap exceeded, 3 malformed input.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mg
