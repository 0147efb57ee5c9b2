#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace needlet::cli {

enum ExitCode : int {
  kSuccess = 0,
  kValidationError = 1,   // bad flag value, missing or malformed file
  kConsistencyError = 2,  // a numerical identity failed
};

/// Entry point shared by main() and the tests. `args` excludes argv[0].
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Reads `key = value` lines (blank lines and # comments ignored) and
/// appends `--key value` for every key not already given in `args`.
/// Throws std::invalid_argument naming the path on unreadable files or
/// malformed lines.
std::vector<std::string> merge_config_file(const std::vector<std::string>& args, const std::string& path);

}  // namespace needlet::cli
