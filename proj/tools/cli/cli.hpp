#pragma once

// Command-line frontend: factor, lift, ideals, classify, oracle, crosscheck and
// export-map, reporting as JSON or plain tables.

#include <iosfwd>
#include <string>
#include <vector>

namespace rbcm::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command. args excludes the program name. Results go to `out` (or
/// to --output when given), diagnostics to `err`.
int execute(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rbcm::cli
