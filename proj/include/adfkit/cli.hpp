#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace adfkit {

/// Entry point of the command-line front end. `args` excludes the program
/// name. Reads the file named by the positional input argument, or `in`
/// when the argument is "-".
///
/// Exit codes: 0 ok, 1 empty result (or failing verify checks), 2 input
/// error, 3 capacity exceeded.
int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err);

}  // namespace adfkit
