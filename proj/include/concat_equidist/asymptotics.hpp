#pragma once

// Main terms of the leading-digit counts along the subsequences
//   n_j = floor(2 * 10^j / k)          (multiple-of-k tails)
//   N_J = g(2 * 10^J)                  (polynomial tails, g the floor inverse)
// together with the limiting densities these counts approach.

#include <cstdint>
#include <string>
#include <vector>

#include "concat_equidist/bigint.hpp"
#include "concat_equidist/counting.hpp"
#include "concat_equidist/seqgen.hpp"

namespace concat_equidist {

// sum_{i=0}^{J} floor(10^i / k), exact.
BigInt lemma1_main_term(const BigInt& k, unsigned J);

struct ScanPoint {
  int j = 0;
  std::uint64_t N = 0;
};

struct LinearSubsequence {
  // Smallest j with 2 * 10^j > k; points start here.
  int first_valid_j = 0;
  std::vector<ScanPoint> points;
};

// (j, floor(2*10^j/k)) for first_valid_j <= j <= j_max. An empty point list
// means j_max is below the threshold; first_valid_j says where it starts.
LinearSubsequence subsequence_points_linear(const BigInt& k, int j_max);

// (J, g(2*10^J) - n_min + 1) for 1 <= J <= J_max, skipping J with
// 2*10^J < f(n_min). The N values count indices from n_min.
std::vector<ScanPoint> subsequence_points_poly(const IntPoly& poly, int J_max);

// Unique n >= n_min with f(n) <= m < f(n+1). Throws DomainError if m < f(n_min).
BigInt poly_floor_inverse(const IntPoly& poly, const BigInt& m);

// poly_floor_inverse(m) - (m / c_d)^{1/d}.
double inverse_epsilon(const IntPoly& poly, const BigInt& m);

// ((2^{1/d} - 1) / c_d^{1/d}) * sum_{i=1}^{J} 10^{i/d}.
double lemma2_main_term(const IntPoly& poly, unsigned J);

struct LimitConstants {
  int d = 1;
  double paper_lower_bound = 0.0;  // y_d
  double scan_limit = 0.0;         // 2 y_d, the density along N_J
  double baseline_density = 1.0 / 9.0;
};

// y_d = 5^{1/d} (2^{1/d} - 1) / (2 (10^{1/d} - 1)).
double y_value(int d);
LimitConstants limit_constants(int d);
std::vector<double> y_sequence(int d_max);

// log 2 / (2 log 10), the limit of y_d.
double y_limit();

enum class ScanKind { Linear, Polynomial };

struct RatioScanRecord {
  int j = 0;
  std::uint64_t N = 0;
  std::uint64_t count = 0;
  double ratio = 0.0;
  double main_term = 0.0;
  double residual = 0.0;
};

struct RatioScanReport {
  ScanKind kind = ScanKind::Linear;
  int degree = 1;
  std::string spec_label;
  std::string interval;
  std::vector<RatioScanRecord> records;
  double target_constant = 0.0;
  LimitConstants constants;
};

// Counts at every point and attaches the matching main term and limit.
// Points must be non-empty with strictly increasing N.
RatioScanReport ratio_scan(const TailSpec& spec, const HalfOpenInterval& interval,
                           const std::vector<ScanPoint>& points,
                           const CountOptions& options = {});

}  // namespace concat_equidist
