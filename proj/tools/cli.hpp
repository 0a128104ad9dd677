#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bb::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitContract = 3;

// Verbs: run, sweep, probe, detect. Returns the process exit code; never
// throws. argv[0] is the program name.
int parse_and_dispatch(int argc, const char* const* argv, std::ostream& out,
                       std::ostream& err);
// Same, without the program name.
int parse_and_dispatch(const std::vector<std::string>& args, std::ostream& out,
                       std::ostream& err);

// Flat "key = value" lines merged under the command line: for every key not
// already given as --key, "--key value" is appended ("true"/"false" for
// switches). '#' starts a comment. Throws ConfigError.
std::vector<std::string> merge_config_file(const std::vector<std::string>& args,
                                           const std::string& path);

}  // namespace bb::cli
