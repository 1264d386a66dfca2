#pragma once

// Command-line front end. Subcommands: family, table, verify, search.
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <iosfwd>
#include <string>
#include <vector>

namespace canon8 {

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace canon8
