#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qecc {

// Exit codes: 0 success, 2 invalid user input, 3 registry/schema error,
// 4 internal consistency failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qecc
