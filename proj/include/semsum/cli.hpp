#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace semsum::cli {

// Runs the command line `args` (args[0] is the program name). Returns the
// process exit code: 0 success, 1 runtime failure, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Expands "key = value" lines of a config file into long flags for every key
// not already present in `args`. Flags given on the command line win.
std::vector<std::string> merge_config(const std::vector<std::string>& args,
                                      const std::string& config_text);

}  // namespace semsum::cli
