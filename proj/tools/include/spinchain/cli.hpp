#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace spinchain::cli {

/// Exit codes: 0 success, 2 invalid input, 3 a consistency check failed.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInconsistent = 3;

/// Subcommands: global, crystal, poly, prob, diagnose, verify, bench.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Convenience overload; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace spinchain::cli
