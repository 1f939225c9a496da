#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ordext::cli {

// Exit codes: 0 success, 1 input or usage error, 2 a guard rejected the
// request because a hypothesis of the underlying result is missing.
inline constexpr int kOk = 0;
inline constexpr int kInputError = 1;
inline constexpr int kGuardRejected = 2;

std::string usage();

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ordext::cli
