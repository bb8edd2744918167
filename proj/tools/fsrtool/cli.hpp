#pragma once

#include <iosfwd>
#include <string>

#include "fsr/debruijn.hpp"

namespace fsrtool {

// Exit statuses.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;   // FAIL verdict, census mismatch, omega count mismatch
inline constexpr int kExitUsage = 2;     // bad flags, malformed input, refused sizes
inline constexpr int kExitInternal = 3;  // broken internal invariant

/// Runs one fsrtool invocation. argv[0] is the program name.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

/// Bridge table file: one "k: bits" line per entry, '#' comments and blank
/// lines ignored. Missing k values take the default bridge.
fsr::UTable parse_utable(unsigned n, std::istream& in);
std::string format_utable(const fsr::UTable& u);

}  // namespace fsrtool
