#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace brt::cli {

enum ExitCode : int { ok = 0, failed = 1, usage = 2 };

/// Runs one command line (without the program name). Results go to `out`,
/// diagnostics and usage text to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace brt::cli
