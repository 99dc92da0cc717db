#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace girthroot::cli {

/// Exit codes shared by every subcommand.
inline constexpr int kYes = 0;
inline constexpr int kNo = 1;
inline constexpr int kUsage = 2;

/// Runs one invocation; `args` excludes the program name. Input named "-"
/// is read from `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace girthroot::cli
