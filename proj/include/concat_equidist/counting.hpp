#pragma once

// Interval membership of tail values and the counting function
//   A([a,b); N; (x_n)) = #{ n : x_n in [a,b) } over N consecutive indices.

#include <cstdint>
#include <span>
#include <vector>

#include "concat_equidist/bigint.hpp"
#include "concat_equidist/exactnum.hpp"
#include "concat_equidist/seqgen.hpp"

namespace concat_equidist {

struct CountResult {
  HalfOpenInterval interval;
  std::uint64_t N = 0;
  std::uint64_t first_index = 1;
  std::uint64_t count = 0;
  double ratio = 0.0;
  // Largest digit prefix inspected for a single index; 1 on the fast path.
  std::size_t digits_consulted_max = 0;
};

struct CountOptions {
  // Use the leading-digit shortcut when both endpoints have at most one digit.
  bool fast_path = true;
  // 0 means: CONCAT_EQUIDIST_THREADS, else hardware concurrency.
  unsigned threads = 0;
  // 0 means the default budget 4 * digit_length(a_n) + 16.
  std::size_t max_digits = 0;
};

// Decides lo <= x_n < hi by extending the digit prefix of x_n until both
// endpoint comparisons resolve. Throws UndecidedError past max_digits.
bool in_interval(const TailSpec& spec, std::uint64_t n, const HalfOpenInterval& interval,
                 std::size_t max_digits);
bool in_interval(const TailSpec& spec, std::uint64_t n, const HalfOpenInterval& interval);

// Counts indices first_index() .. first_index() + N - 1. Result does not
// depend on the thread count.
CountResult count_A(const TailSpec& spec, const HalfOpenInterval& interval, std::uint64_t N,
                    const CountOptions& options = {});

// Counts an explicit index range [first, first + N).
std::uint64_t count_range(const TailSpec& spec, const HalfOpenInterval& interval,
                          std::uint64_t first, std::uint64_t N, const CountOptions& options,
                          std::size_t* digits_consulted_max = nullptr);

int leading_digit(const BigInt& m, int base = 10);
int leading_digit(std::uint64_t m, int base = 10);

// counts[c] = number of terms whose leading digit is c; counts[0] stays 0.
class LeadingDigitCensus {
 public:
  explicit LeadingDigitCensus(int base = 10);

  void add(const BigInt& term);
  void add(std::uint64_t term);

  int base() const noexcept { return base_; }
  std::uint64_t total() const noexcept { return total_; }
  const std::vector<std::uint64_t>& counts() const noexcept { return counts_; }
  std::uint64_t operator[](int digit) const { return counts_.at(static_cast<std::size_t>(digit)); }

 private:
  int base_;
  std::uint64_t total_ = 0;
  std::vector<std::uint64_t> counts_;
};

// Throws DomainError on an empty stream.
std::vector<std::uint64_t> census(std::span<const BigInt> terms, int base = 10);

// Thread count from CONCAT_EQUIDIST_THREADS, falling back to the hardware.
unsigned default_thread_count();

}  // namespace concat_equidist
