#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ldp {

/// Exit codes: 0 success, 1 check failure, 2 usage error.
int run_command(int argc, char** argv);

/// `args` excludes the program name.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace ldp
