#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sticky::cli {

/// Exit codes: 0 success, 1 validation failure, 2 usage error.
/// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace sticky::cli
