#pragma once

#include <iosfwd>

namespace bim {

/// Exit codes of the command-line tool.
enum ExitCode : int { kPass = 0, kPropertyFailed = 1, kBadInput = 2, kIndeterminate = 3 };

/// Entry point of the `bimod` tool with injectable streams.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err, std::istream& in);

}  // namespace bim
