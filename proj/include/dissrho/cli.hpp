#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dissrho::cli {

/// Runs one command line (args excludes the program name). Exit codes: 0 success,
/// 1 verification failure, 2 usage or input error.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace dissrho::cli
