#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace affsemi {

/// Runs one command line (without the program name). Exit codes: 0 on
/// success, 1 on a domain error, 2 on a usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace affsemi
