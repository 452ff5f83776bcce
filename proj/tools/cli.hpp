#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace rbd::cli {

// Exit codes: 0 success, 1 fixture mismatch, 2 input error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitInput = 2;

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rbd::cli
