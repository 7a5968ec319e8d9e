#pragma once

#include <istream>
#include <ostream>
#include <string>
#include <vector>

namespace foxcolor::cli {

/// Exit codes: 0 success, 1 a verification check failed, 2 input error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitInputError = 2;

/// `args` excludes the program name. `in` feeds `verify --stdin`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace foxcolor::cli
