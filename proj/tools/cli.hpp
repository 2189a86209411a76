#pragma once

#include <iosfwd>

namespace scheme_forge::cli {

/// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 invalid input file.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerification = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInvalidInput = 3;

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace scheme_forge::cli
