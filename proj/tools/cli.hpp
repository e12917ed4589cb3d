#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pancyc::cli {

enum ExitCode : int { ok = 0, failure = 1, usage = 2, invalid_data = 3 };

/// Runs one subcommand. args excludes the program name. Graph inputs named
/// "-" (or omitted) are read from `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace pancyc::cli
