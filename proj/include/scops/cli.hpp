#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace scops::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kUsage = 2 };

/// Runs one invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Parses `A..B` (inclusive) or a single integer `A`.
std::pair<int, int> parse_range(const std::string& text);

}  // namespace scops::cli
