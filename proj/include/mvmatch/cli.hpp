#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mvmatch::cli {

// Each command takes its arguments without the program or subcommand name,
// writes results to `out` and diagnostics to `err`, and returns the exit code.
// search: 0 on at least one match, 1 on none, 2 on error. gen, bench: 0 or 2.

int cmd_search(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int cmd_gen(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int cmd_bench(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Dispatches on the first argument: search, gen or bench.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mvmatch::cli
