#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kmarc::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFalse = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (without the program name). JSON goes to `out`,
/// diagnostics to `err`; arc input is read from `in` unless --arc is given.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace kmarc::cli
