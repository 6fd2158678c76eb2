#pragma once

// The three concatenation-tail families
//   x_n = 0.(a_n)(a_{n+1})(a_{n+2})...
// with a_n = n, a_n = k n, or a_n = f(n) for an integer polynomial f.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "concat_equidist/bigint.hpp"
#include "concat_equidist/exactnum.hpp"

namespace concat_equidist {

// Integer polynomial c_0 + c_1 n + ... + c_d n^d with d >= 1, c_d >= 1.
//
// Construction certifies n_min: the least n >= 1 such that f(m) >= 1 and
// f(m+1) > f(m) for every m >= n. Above a Cauchy bound on the roots of the
// forward difference f(n+1) - f(n) and of f(n) - 1 both conditions hold
// automatically; below it every n is checked exactly.
class IntPoly {
 public:
  // Coefficients constant term first. Trailing zeros are dropped.
  explicit IntPoly(std::vector<BigInt> coeffs);
  // "0,0,1" -> n^2
  static IntPoly parse(std::string_view csv);

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
  const BigInt& leading() const noexcept { return coeffs_.back(); }
  // Coefficient of n^i, zero above the degree.
  BigInt coeff(int i) const { return i >= 0 && i <= degree() ? coeffs_[i] : BigInt(0); }
  std::uint64_t n_min() const noexcept { return n_min_; }

  BigInt operator()(const BigInt& n) const;
  std::string to_string() const;

  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  std::vector<BigInt> coeffs_;
  std::uint64_t n_min_ = 1;
};

// Exact Horner evaluation.
BigInt poly_eval(const IntPoly& poly, const BigInt& n);

enum class TailKind { Champernowne, Multiple, Polynomial };

class TailSpec {
 public:
  static TailSpec champernowne(int base = 10);
  static TailSpec multiple(BigInt k, int base = 10);
  static TailSpec polynomial(IntPoly poly, int base = 10);

  TailKind kind() const noexcept { return kind_; }
  int base() const noexcept { return base_; }
  // Multiplier for Champernowne (1) and Multiple tails.
  const BigInt& k() const noexcept { return k_; }
  // Only for Polynomial tails.
  const IntPoly& poly() const;
  // Smallest admissible index: 1, or the certified n_min of the polynomial.
  std::uint64_t first_index() const noexcept;
  // Theorem-reproduction paths are pinned to decimal.
  void require_decimal() const;
  std::string label() const;

 private:
  TailSpec(TailKind kind, int base, BigInt k, std::optional<IntPoly> poly)
      : kind_(kind), base_(base), k_(std::move(k)), poly_(std::move(poly)) {}

  TailKind kind_;
  int base_;
  BigInt k_;
  std::optional<IntPoly> poly_;
};

// a_{n+offset}. Throws DomainError for n = 0 or n below the polynomial's n_min.
BigInt term(const TailSpec& spec, std::uint64_t n, std::uint64_t offset = 0);

// Walks a_n, a_{n+1}, ... with one addition per step (forward differences for
// polynomials, so a step costs d big-integer additions).
class TermCursor {
 public:
  TermCursor(const TailSpec& spec, std::uint64_t n);

  const BigInt& value() const noexcept { return diffs_.front(); }
  std::uint64_t index() const noexcept { return index_; }
  void advance();

 private:
  std::vector<BigInt> diffs_;  // value, then forward differences of rising order
  std::uint64_t index_;
};

// Lazy, restartable digit generator for x_n. Produces digits term by term and
// never evaluates a term before its first digit is requested.
class TailDigitStream {
 public:
  TailDigitStream(const TailSpec& spec, std::uint64_t n);

  int next();
  // Number of digits produced so far.
  std::size_t position() const noexcept { return produced_; }
  // Number of terms whose digits have been started.
  std::size_t terms_consulted() const noexcept { return terms_; }
  // Length of the term currently being emitted.
  std::size_t current_term_length() const noexcept { return buffer_.size(); }

 private:
  TermCursor cursor_;
  int base_;
  std::string buffer_;
  std::size_t cursor_pos_ = 0;
  std::size_t produced_ = 0;
  std::size_t terms_ = 0;
};

// First p digits of x_n.
DigitString tail_digits(const TailSpec& spec, std::uint64_t n, std::size_t p);

}  // namespace concat_equidist
