#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "latinrect/enumerator.hpp"

namespace latinrect::cli {

/// Stable process exit codes.
enum ExitCode : int { ok = 0, usage = 1, guard = 2, mismatch = 3 };

/// Runs the command line `args` (without the program name) and returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

std::string count_json(const CountResult& r);
std::string count_human(const CountResult& r);
std::string count_csv(const CountResult& r);

/// "a..b" or a single integer "a" (= "a..a").
std::pair<unsigned, unsigned> parse_range(const std::string& text);

}  // namespace latinrect::cli
