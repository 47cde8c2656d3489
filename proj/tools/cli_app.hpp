#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace shiftdist::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kDomainError = 1;
inline constexpr int kUsageError = 2;

// Runs one subcommand. The report document goes to `out`; usage errors,
// progress and cache status go to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace shiftdist::cli
