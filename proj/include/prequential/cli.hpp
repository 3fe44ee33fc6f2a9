#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace prequential::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitIo = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line `args` (without the program name). Returns the
/// process exit code: 0 success, 1 I/O failure, 2 usage or validation error.
int run(const std::vector<std::string> &args, std::ostream &out,
        std::ostream &err);

} // namespace prequential::cli
