#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace trochoid::cli {

// Runs one invocation. `args` excludes the program name.
// Exit codes: 0 success, 1 verification or runtime failure, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace trochoid::cli
