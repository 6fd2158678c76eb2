#pragma once

// Distribution diagnostics for point sets in [0,1): star and extreme
// discrepancy, the deviation from uniformity over a subinterval [alpha,beta),
// Weyl sums, and Benford statistics of integer sequences through the
// fractional parts of log10.

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "concat_equidist/bigint.hpp"
#include "concat_equidist/exactnum.hpp"
#include "concat_equidist/seqgen.hpp"

namespace concat_equidist {

// Values in [0,1).
class PointSet {
 public:
  PointSet() = default;
  explicit PointSet(std::vector<double> values);

  std::span<const double> values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  bool empty() const noexcept { return values_.empty(); }

 private:
  std::vector<double> values_;
};

// D*_N = max_i max(i/N - v_(i), v_(i) - (i-1)/N) over the sorted points.
double star_discrepancy(const PointSet& points);
// D_N = 1/N + max_i (i/N - v_(i)) - min_i (i/N - v_(i)).
double extreme_discrepancy(const PointSet& points);

enum class DiscrepancyKind { Star, Extreme };

// Discrepancy of {(t - alpha) / (beta - alpha)}: how far the points are from
// uniform over [alpha, beta). Throws DomainError for a point outside it.
double ud_deviation(const PointSet& points, const ExactEndpoint& alpha, const ExactEndpoint& beta,
                    DiscrepancyKind kind = DiscrepancyKind::Star);

// |(1/N) sum_n exp(2 pi i h v_n)|.
double weyl_sum(const PointSet& points, long h);

// log10(m) split as integer part (digit length - 1) and fractional part,
// from the leading 18 digits. Exact multiples c * 10^k of small c are reduced
// to c first, and the fraction is kept inside [log10 c1, log10 (c1+1)) for the
// leading digit c1 so the digit side is never flipped by rounding.
struct Log10Parts {
  std::uint64_t integer = 0;
  double fraction = 0.0;
};
Log10Parts log10_parts(const BigInt& m);

PointSet log_fracparts(std::span<const BigInt> terms);

// Approximate tail values x_n (first 17 digits) for n = first .. first+N-1.
PointSet tail_points(const TailSpec& spec, std::uint64_t first, std::uint64_t N);

struct BenfordReport {
  std::uint64_t N = 0;
  std::array<std::uint64_t, 9> digit_count{};
  std::array<double, 9> digit_freq{};
  std::array<double, 9> benford_freq{};
  double max_abs_gap = 0.0;
  double log_discrepancy = 0.0;
};

// log10(1 + 1/c) for c = 1..9.
std::array<double, 9> benford_reference();

BenfordReport benford_report(std::span<const BigInt> terms);

// log_b f(n) / log_b n. Throws DomainError for n <= 1 or n < n_min.
double poly_log_ratio(const IntPoly& poly, std::uint64_t n, int base = 10);
// log_b f(n) - d log_b n, which tends to log_b c_d.
double poly_log_offset(const IntPoly& poly, std::uint64_t n, int base = 10);

}  // namespace concat_equidist
