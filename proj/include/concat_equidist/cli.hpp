#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace concat_equidist::cli {

enum ExitCode : int {
  kSuccess = 0,
  kUsageError = 1,
  kDomainError = 2,
  kUndecided = 3,
};

// Default desk-scale limits, lifted by --unsafe-uncapped.
inline constexpr int kMaxLinearJ = 6;
inline constexpr int kMaxPolyJ = 8;
inline constexpr unsigned long long kMaxIndices = 10'000'000ULL;
inline constexpr unsigned long long kMaxPow2Terms = 100'000ULL;

// Runs one command. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace concat_equidist::cli
