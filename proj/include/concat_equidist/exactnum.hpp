#pragma once

// Exact digit-level arithmetic: base-b digit strings, terminating endpoints in
// [0,1], and the prefix comparison that decides interval membership without
// floating point.

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "concat_equidist/bigint.hpp"

namespace concat_equidist {

inline constexpr int kMinBase = 2;
inline constexpr int kMaxBase = 36;

void check_base(int base);

// Finite prefix d1 d2 ... dp of a base-b expansion 0.d1d2...
class DigitString {
 public:
  explicit DigitString(int base = 10);
  DigitString(int base, std::vector<std::uint8_t> digits);

  int base() const noexcept { return base_; }
  std::span<const std::uint8_t> digits() const noexcept { return digits_; }
  std::size_t size() const noexcept { return digits_.size(); }
  bool empty() const noexcept { return digits_.empty(); }
  std::uint8_t operator[](std::size_t i) const { return digits_[i]; }

  void push_back(int digit);
  void append(const DigitString& other);
  void truncate(std::size_t p);

  // Digits as characters 0-9a-z, no "0." prefix.
  std::string to_string() const;

  friend bool operator==(const DigitString&, const DigitString&) = default;

 private:
  int base_;
  std::vector<std::uint8_t> digits_;
};

// Terminating base-b value 0.d1...dm in [0,1], or exactly 1.
// Canonical: no trailing zeros, zero is the empty list.
class ExactEndpoint {
 public:
  static ExactEndpoint zero(int base = 10);
  static ExactEndpoint one(int base = 10);
  static ExactEndpoint from_digits(int base, std::vector<std::uint8_t> digits);
  // Accepts "0", "1", "1.0", "0.15", ".25" style base-b strings. Throws
  // DomainError for anything outside [0,1] or not a plain terminating numeral.
  static ExactEndpoint parse(std::string_view text, int base = 10);

  int base() const noexcept { return base_; }
  bool is_one() const noexcept { return one_; }
  std::span<const std::uint8_t> digits() const noexcept { return digits_; }
  // Digit at 1-based position i of the zero-padded expansion (0 past the end).
  int digit_at(std::size_t i) const noexcept {
    return i >= 1 && i <= digits_.size() ? digits_[i - 1] : 0;
  }

  double to_double() const;
  std::string to_string() const;

  friend std::strong_ordering operator<=>(const ExactEndpoint& a, const ExactEndpoint& b);
  friend bool operator==(const ExactEndpoint& a, const ExactEndpoint& b) {
    return (a <=> b) == std::strong_ordering::equal;
  }

 private:
  ExactEndpoint(int base, std::vector<std::uint8_t> digits, bool one)
      : base_(base), digits_(std::move(digits)), one_(one) {}

  int base_;
  std::vector<std::uint8_t> digits_;
  bool one_;
};

// [lo, hi) with lo < hi and matching bases.
class HalfOpenInterval {
 public:
  HalfOpenInterval(ExactEndpoint lo, ExactEndpoint hi);

  const ExactEndpoint& lo() const noexcept { return lo_; }
  const ExactEndpoint& hi() const noexcept { return hi_; }
  int base() const noexcept { return lo_.base(); }
  std::string to_string() const;

  friend bool operator==(const HalfOpenInterval&, const HalfOpenInterval&) = default;

 private:
  ExactEndpoint lo_;
  ExactEndpoint hi_;
};

enum class PrefixOrder { DefinitelyLess, DefinitelyGreaterOrEqual, Undecided };

// Base-b expansion of n >= 1, most significant digit first.
DigitString int_to_digits(const BigInt& n, int base = 10);
BigInt digits_to_int(const DigitString& digits);

// floor(log_base n) + 1 by exact comparison against powers of the base.
std::size_t digit_length(const BigInt& n, int base = 10);
std::size_t digit_length(std::uint64_t n, int base = 10);

// Compares every standard expansion continuing `prefix` against `e`.
// Continuations are real numbers in [0.prefix, 0.prefix + b^-p).
PrefixOrder compare_prefix(const DigitString& prefix, const ExactEndpoint& e);

char digit_char(int d);

}  // namespace concat_equidist
