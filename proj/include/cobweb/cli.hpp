#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cobweb::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int { kOk = 0, kPropertyFails = 1, kUsage = 2 };

/// Runs one invocation; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace cobweb::cli
