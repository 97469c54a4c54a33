#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace vpf::cli {

/// Runs one command; args excludes the program name. Returns the exit code:
/// 0 success, 1 verification failure, 2 usage or parse error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace vpf::cli
