#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace incrtree::cli {

// Runs the incrtree command line. args excludes the program name.
// Exit codes: 0 success / checks passed, 1 check failed, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace incrtree::cli
