#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace circsum::cli {

/// Runs the command line given argv-style arguments (program name excluded).
/// Exit codes: 0 = all pass, 1 = at least one fail, 2 = usage/parse error,
/// 3 = inconclusive (tail bounds exceeded the tolerance).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace circsum::cli
