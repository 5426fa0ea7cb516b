#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace conductor::cli {

// Runs one command given as plain arguments (no program name), writing data
// to out and diagnostics to err.  Returns 0 on success, 1 when a verification
// or internal consistency check fails, 2 on usage errors or invalid input.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace conductor::cli
