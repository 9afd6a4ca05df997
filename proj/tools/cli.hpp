#pragma once

#include <iosfwd>

namespace colbwt::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kInputError = 2;
inline constexpr int kBadCombination = 3;
inline constexpr int kMalformed = 4;
inline constexpr int kGuard = 5;
inline constexpr int kNotLocalized = 6;

// Runs the tool in-process; `in` stands in for stdin.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace colbwt::cli
