#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nacm {

// Runs the full command-line surface on explicit streams so tests can drive
// it in-process. args excludes the program name. Returns the process exit
// status: 0 success, 2 invalid input, 1 internal defect.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace nacm
