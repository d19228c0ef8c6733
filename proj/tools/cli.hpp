#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sptforge::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;

inline constexpr int kMaxTableSize = 2000;

// args excludes the program name. Output goes to out unless --output is
// given; diagnostics go to err.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace sptforge::cli
