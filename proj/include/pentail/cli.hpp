#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pentail::cli {

// Dispatches one subcommand invocation (argv without the program name).
// Exit codes: 0 = positive verdict or successful report, 1 = negative
// verdict, 2 = usage or parse error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pentail::cli
