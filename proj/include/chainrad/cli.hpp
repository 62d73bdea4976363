#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace chainrad::cli {

enum ExitCode : int {
    kSuccess = 0,
    kParseError = 2,
    kValidationError = 3,
    kComputationError = 4,
};

/// Environment variable naming the directory relative `--out` paths resolve against.
inline constexpr const char* kOutputDirEnv = "CHAIN_RADIANCE_OUT";

/// Runs one command. `args` excludes the program name. Results go to `out`
/// unless `--out` names a file; errors are written to `err` as one JSON line.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace chainrad::cli
