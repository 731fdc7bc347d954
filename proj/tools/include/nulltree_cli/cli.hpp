#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nulltree::cli {

/// Runs one command line (args excludes the program name). Returns the exit
/// code: 0 on success, 1 on a domain error, 2 on a failed verification.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace nulltree::cli
