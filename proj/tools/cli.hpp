#pragma once

// Command-line front end, callable in-process (used by the tests).

#include <ostream>
#include <string>
#include <vector>

namespace finring::cli {

inline constexpr int kExitHolds = 0;
inline constexpr int kExitFails = 1;
inline constexpr int kExitError = 2;

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace finring::cli
