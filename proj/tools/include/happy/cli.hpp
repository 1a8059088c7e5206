#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace happy {

// Entry point of the `happy` tool. args excludes the program name.
// Exit codes: 0 success, 1 usage/parse/contract error, 2 refusal
// (enumeration budget, q above the max degree), 3 a verified property failed.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace happy
