#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "concat_equidist/counting.hpp"
#include "concat_equidist/equidist.hpp"
#include "concat_equidist/errors.hpp"

using namespace concat_equidist;

namespace {

IntPoly poly(std::vector<long> c) {
  std::vector<BigInt> coeffs;
  for (long v : c) coeffs.emplace_back(v);
  return IntPoly(std::move(coeffs));
}

PointSet rotation(double theta, int N) {
  std::vector<double> v;
  for (int n = 1; n <= N; ++n) {
    const double x = n * theta;
    v.push_back(x - std::floor(x));
  }
  return PointSet(std::move(v));
}

std::vector<BigInt> naturals(std::uint64_t N) {
  std::vector<BigInt> out;
  for (std::uint64_t n = 1; n <= N; ++n) out.push_back(big_from_u64(n));
  return out;
}

std::vector<BigInt> powers_of_two(int N) {
  std::vector<BigInt> out;
  BigInt p = 1;
  for (int n = 1; n <= N; ++n) out.push_back(p *= 2);
  return out;
}

// Quadratic-time discrepancy oracle: checks every anchored interval [0, t)
// at t just below/at each point.
double brute_star(const std::vector<double>& v) {
  const double N = static_cast<double>(v.size());
  double d = 0.0;
  for (double t : v) {
    double below = 0, at_or_below = 0;
    for (double x : v) {
      below += x < t;
      at_or_below += x <= t;
    }
    d = std::max({d, std::abs(below / N - t), std::abs(at_or_below / N - t)});
  }
  return d;
}

}  // namespace

TEST_CASE("star discrepancy of grids") {
  for (int N : {10, 100, 1000}) {
    std::vector<double> right, centered;
    for (int i = 1; i <= N; ++i) {
      right.push_back(static_cast<double>(i) / N == 1.0 ? 0.0 : static_cast<double>(i) / N);
      centered.push_back((2.0 * i - 1) / (2.0 * N));
    }
    CHECK(std::abs(star_discrepancy(PointSet(right)) - 1.0 / N) < 1e-12);
    CHECK(std::abs(star_discrepancy(PointSet(centered)) - 1.0 / (2 * N)) < 1e-12);
  }
}

TEST_CASE("star discrepancy agrees with brute force on random sets") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> v(1 + rng() % 200);
    for (auto& x : v) x = u(rng);
    if (trial % 5 == 0) v.assign(v.size(), 0.25);
    const double d = star_discrepancy(PointSet(v));
    CHECK(d == doctest::Approx(brute_star(v)).epsilon(1e-12));
    CHECK(d > 0.0);
    CHECK(d <= 1.0);
    const double e = extreme_discrepancy(PointSet(v));
    CHECK(e >= d - 1e-15);
    CHECK(e <= 2.0 * d + 1e-15);
  }
}

TEST_CASE("rotation by log10 2 is nearly uniform") {
  const double theta = std::log10(2.0);
  const double d4 = star_discrepancy(rotation(theta, 10'000));
  CHECK(d4 <= 0.01);
  CHECK(d4 < star_discrepancy(rotation(theta, 100)));
}

TEST_CASE("extreme discrepancy of the grid") {
  std::vector<double> v;
  for (int i = 0; i < 50; ++i) v.push_back(i / 50.0);
  CHECK(extreme_discrepancy(PointSet(v)) == doctest::Approx(1.0 / 50));
}

TEST_CASE("ud_deviation") {
  const auto alpha = ExactEndpoint::parse("0.1");
  const auto beta = ExactEndpoint::one();
  for (int N : {10, 1000}) {
    std::vector<double> grid;
    for (int i = 0; i < N; ++i) grid.push_back(0.1 + 0.9 * i / N);
    CHECK(ud_deviation(PointSet(grid), alpha, beta) == doctest::Approx(1.0 / N).epsilon(1e-9));
  }
  CHECK(ud_deviation(PointSet(std::vector<double>(7, 0.1)), alpha, beta) == 1.0);

  // Champernowne tails pile onto [0.1,0.2): deviation >= 1/2 - 1/9.
  const auto tails = tail_points(TailSpec::champernowne(), 1, 20'000);
  const double dev = ud_deviation(tails, alpha, beta);
  CHECK(dev >= 0.4);
  CHECK(ud_deviation(tails, alpha, beta, DiscrepancyKind::Extreme) >= dev);

  CHECK_THROWS_AS(ud_deviation(PointSet({0.05}), alpha, beta), DomainError);
  CHECK_THROWS_AS(ud_deviation(PointSet({0.5}), beta, alpha), DomainError);
  CHECK_THROWS_AS(star_discrepancy(PointSet{}), DomainError);
}

TEST_CASE("tail_points approximates the digit stream") {
  const auto pts = tail_points(TailSpec::champernowne(), 20, 1);
  CHECK(pts.values()[0] == doctest::Approx(0.20212223242526272).epsilon(1e-15));
  // a_n = n^20 - 1 starts with twenty 9s at n = 10.
  std::vector<long> c(21, 0);
  c[0] = -1;
  c[20] = 1;
  const auto nines = tail_points(TailSpec::polynomial(poly(c)), 10, 1);
  CHECK(nines.values()[0] < 1.0);
}

TEST_CASE("weyl sums") {
  std::vector<double> grid;
  for (int i = 0; i < 1000; ++i) grid.push_back(i / 1000.0);
  CHECK(weyl_sum(PointSet(grid), 1) < 1e-12);
  CHECK(weyl_sum(PointSet(std::vector<double>(9, 0.0)), 5) == doctest::Approx(1.0));
  CHECK(weyl_sum(PointSet(std::vector<double>(9, 0.0)), -3) == doctest::Approx(1.0));

  const double theta = std::log10(2.0);
  const int N = 10'000;
  const double geometric_bound =
      2.0 / (N * std::abs(1.0 - std::polar(1.0, 2.0 * std::numbers::pi * theta)));
  const double w = weyl_sum(rotation(theta, N), 1);
  CHECK(w <= 0.01);
  CHECK(w <= geometric_bound + 1e-12);
  CHECK_THROWS_AS(weyl_sum(PointSet(grid), 0), DomainError);
}

TEST_CASE("log fractional parts") {
  std::vector<BigInt> tens;
  for (unsigned long i = 0; i <= 5; ++i) tens.push_back(big_pow(10, i));
  const auto tens_parts = log_fracparts(tens);
  for (double v : tens_parts.values()) CHECK(v == 0.0);

  const auto p2_parts = log_fracparts(powers_of_two(5));
  const auto p2 = p2_parts.values();
  for (int n = 1; n <= 5; ++n) {
    const double x = n * std::log10(2.0);
    CHECK(p2[n - 1] == doctest::Approx(x - std::floor(x)).epsilon(1e-14));
  }
  const auto digit_parts = log_fracparts(naturals(9));
  const auto digits = digit_parts.values();
  for (int n = 1; n <= 9; ++n) CHECK(digits[n - 1] == doctest::Approx(std::log10(n)).epsilon(1e-15));

  CHECK_THROWS_AS(log_fracparts(std::vector<BigInt>{BigInt(0)}), DomainError);
}

TEST_CASE("log10_parts stays on the leading digit's side") {
  std::vector<BigInt> hard;
  for (unsigned long k = 1; k <= 60; ++k) {
    const BigInt p = big_pow(10, k);
    hard.push_back(p - 1);
    hard.push_back(p);
    hard.push_back(p + 1);
    hard.push_back(2 * p - 1);
    hard.push_back(2 * p);
    hard.push_back(7 * p);
  }
  std::mt19937_64 rng(23);
  for (int i = 0; i < 2000; ++i) {
    BigInt v = big_from_u64(rng() | 1);
    for (int r = 0; r < i % 5; ++r) v = v * big_from_u64(rng() | 1);
    hard.push_back(v);
  }
  for (const auto& v : hard) {
    const auto parts = log10_parts(v);
    CHECK(parts.integer + 1 == digit_length(v));
    CHECK(parts.fraction >= 0.0);
    CHECK(parts.fraction < 1.0);
    CHECK(static_cast<int>(std::floor(std::pow(10.0, parts.fraction) + 1e-12)) >= leading_digit(v));
    CHECK(parts.fraction >= std::log10(static_cast<double>(leading_digit(v))));
    if (leading_digit(v) < 9) {
      CHECK(parts.fraction < std::log10(static_cast<double>(leading_digit(v) + 1)));
    }
  }
  CHECK(log10_parts(BigInt(7) * big_pow(10, 40)).fraction == std::log10(7.0));
  // Machine-precision agreement with long double on 64-bit values.
  for (int i = 0; i < 2000; ++i) {
    const std::uint64_t v = (rng() >> (rng() % 63)) | 1;
    const long double ref = std::log10(static_cast<long double>(v));
    const auto parts = log10_parts(big_from_u64(v));
    CHECK(std::abs(static_cast<long double>(parts.integer) + parts.fraction - ref) < 1e-14L);
  }
}

TEST_CASE("benford reports") {
  const auto nat = benford_report(naturals(20'000));
  CHECK(nat.N == 20'000);
  CHECK(nat.digit_freq[0] >= 0.5);
  CHECK(nat.max_abs_gap >= 0.2);
  CHECK(nat.log_discrepancy >= 0.2);

  const auto p2 = benford_report(powers_of_two(10'000));
  CHECK(p2.max_abs_gap <= 0.02);
  CHECK(p2.log_discrepancy <= 0.01);

  const auto one = benford_report(std::vector<BigInt>{BigInt(1)});
  CHECK(one.digit_freq[0] == 1.0);
  for (int c = 1; c < 9; ++c) CHECK(one.digit_freq[c] == 0.0);

  const auto ref = benford_reference();
  CHECK(ref[0] == doctest::Approx(0.30103).epsilon(1e-5));
  double total = 0.0;
  for (double f : nat.digit_freq) total += f;
  CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
  CHECK_THROWS_AS(benford_report(std::vector<BigInt>{}), DomainError);
}

TEST_CASE("Benford gap is bounded by twice the log discrepancy") {
  std::vector<std::vector<BigInt>> streams = {naturals(20'000), powers_of_two(3000),
                                              std::vector<BigInt>(10, BigInt(5))};
  std::vector<BigInt> squares;
  for (std::uint64_t n = 1; n <= 5000; ++n) squares.push_back(big_from_u64(n * n));
  streams.push_back(squares);
  std::vector<BigInt> threes;
  BigInt p = 1;
  for (int n = 0; n < 2000; ++n) threes.push_back(p *= 3);
  streams.push_back(threes);
  for (const auto& s : streams) {
    const auto r = benford_report(s);
    CHECK(r.max_abs_gap <= 2.0 * r.log_discrepancy + 2.0 / static_cast<double>(r.N));
  }
}

TEST_CASE("naturals are not a strong Benford sequence") {
  for (std::uint64_t N : {2'000ull, 20'000ull, 200'000ull}) {
    const auto r = benford_report(naturals(N));
    CHECK(r.log_discrepancy >= 0.2);
    CHECK(r.digit_freq[0] >= 0.5);
  }
}

TEST_CASE("poly_log_ratio") {
  CHECK(poly_log_ratio(poly({0, 0, 1}), 1'000'000) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(std::abs(poly_log_ratio(poly({0, 1, 0, 1}), 10'000) - 3.0) < 1e-3);
  CHECK(poly_log_ratio(poly({0, 1}), 100) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(poly_log_ratio(poly({0, 0, 1}), 1000, 2) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK_THROWS_AS(poly_log_ratio(poly({0, 1}), 1), DomainError);
  CHECK_THROWS_AS(poly_log_ratio(poly({-5, 1}), 3), DomainError);
  CHECK_THROWS_AS(poly_log_ratio(poly({0, 1}), 10, 1), DomainError);

  for (const auto& f : {poly({0, 0, 1}), poly({0, 10, 1}), poly({1, 0, 0, 2}), poly({-50, 3, 7})}) {
    double coeff_sum = 0;
    for (const auto& c : f.coeffs()) coeff_sum += std::abs(c.get_d());
    const double bound = coeff_sum / std::log10(1e6);
    CHECK(std::abs(poly_log_ratio(f, 1'000'000) - f.degree()) <= bound);
  }
}

TEST_CASE("log_b f(n) - d log_b n approaches log_b c_d") {
  for (const auto& f : {poly({1, 0, 0, 2}), poly({-50, 3, 7}), poly({0, 10, 1})}) {
    for (int base : {2, 10}) {
      const double target = std::log(f.leading().get_d()) / std::log(static_cast<double>(base));
      const double far = std::abs(poly_log_offset(f, 1'000'000, base) - target);
      const double near = std::abs(poly_log_offset(f, 100, base) - target);
      CHECK(far <= near);
      CHECK(far < 1e-4);
    }
  }
}

TEST_CASE("point sets reject values outside [0,1)") {
  CHECK_THROWS_AS(PointSet({1.0}), DomainError);
  CHECK_THROWS_AS(PointSet({-0.1}), DomainError);
  CHECK_THROWS_AS(PointSet({std::nan("")}), DomainError);
}
