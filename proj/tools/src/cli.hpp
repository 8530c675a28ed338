#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace fatcat::cli {

/// Exit codes: 0 every requested check passed, 1 a check failed (witnesses
/// in the report), 2 malformed input or invalid parameters.
inline constexpr int kPass = 0;
inline constexpr int kFail = 1;
inline constexpr int kMalformed = 2;

/// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fatcat::cli
