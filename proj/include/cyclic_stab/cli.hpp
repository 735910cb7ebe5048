#pragma once
#include <iosfwd>
#include <string>
#include <vector>

namespace cstab {

// Entry point of the cyclic-stab tool. args excludes the program name.
// Exit codes: 0 pass, 1 fail, 2 document or usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cstab
