#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ndpoly {

// Exit codes: 0 success, 1 analysis found a negative verdict, 2 input error.
// JSON payload goes to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ndpoly
