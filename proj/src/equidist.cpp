#include "concat_equidist/equidist.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

#include "concat_equidist/counting.hpp"
#include "concat_equidist/errors.hpp"

namespace concat_equidist {

namespace {

constexpr std::size_t kMantissaDigits = 18;
constexpr std::size_t kTailValueDigits = 17;

const double kBelowOne = std::nextafter(1.0, 0.0);

std::vector<double> sorted_values(const PointSet& points) {
  if (points.empty()) throw DomainError("discrepancy of an empty point set");
  std::vector<double> v(points.values().begin(), points.values().end());
  std::sort(v.begin(), v.end());
  return v;
}

long double pow10l(std::size_t k) {
  long double p = 1.0L;
  for (std::size_t i = 0; i < k; ++i) p *= 10.0L;
  return p;
}

}  // namespace

PointSet::PointSet(std::vector<double> values) : values_(std::move(values)) {
  for (double v : values_) {
    if (!(v >= 0.0 && v < 1.0)) throw DomainError("point outside [0,1)");
  }
}

double star_discrepancy(const PointSet& points) {
  const auto v = sorted_values(points);
  const double n = static_cast<double>(v.size());
  double d = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const double above = static_cast<double>(i + 1) / n - v[i];
    const double below = v[i] - static_cast<double>(i) / n;
    d = std::max({d, above, below});
  }
  return d;
}

double extreme_discrepancy(const PointSet& points) {
  const auto v = sorted_values(points);
  const double n = static_cast<double>(v.size());
  double hi = -1.0;
  double lo = 2.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const double gap = static_cast<double>(i + 1) / n - v[i];
    hi = std::max(hi, gap);
    lo = std::min(lo, gap);
  }
  return 1.0 / n + hi - lo;
}

double ud_deviation(const PointSet& points, const ExactEndpoint& alpha, const ExactEndpoint& beta,
                    DiscrepancyKind kind) {
  if (!(alpha < beta)) throw DomainError("ud_deviation requires alpha < beta");
  const double a = alpha.to_double();
  const double b = beta.to_double();
  std::vector<double> rescaled;
  rescaled.reserve(points.size());
  for (double v : points.values()) {
    if (v < a || v >= b) throw DomainError("point outside [alpha, beta)");
    rescaled.push_back(std::clamp((v - a) / (b - a), 0.0, kBelowOne));
  }
  const PointSet scaled(std::move(rescaled));
  return kind == DiscrepancyKind::Star ? star_discrepancy(scaled) : extreme_discrepancy(scaled);
}

double weyl_sum(const PointSet& points, long h) {
  if (h == 0) throw DomainError("weyl_sum requires h != 0");
  if (points.empty()) throw DomainError("weyl_sum of an empty point set");
  std::complex<double> sum = 0.0;
  for (double v : points.values()) {
    const double x = static_cast<double>(h) * v;
    const double phase = 2.0 * std::numbers::pi * (x - std::floor(x));
    sum += std::polar(1.0, phase);
  }
  return std::abs(sum) / static_cast<double>(points.size());
}

Log10Parts log10_parts(const BigInt& m) {
  if (sgn(m) <= 0) throw DomainError("log10 of a non-positive term");
  const std::size_t len = digit_length(m, 10);

  BigInt head = m;
  bool exact = true;  // head * 10^(len - digits(head)) == m
  if (len > kMantissaDigits) {
    const BigInt scale = big_pow(10, len - kMantissaDigits);
    BigInt rem;
    mpz_tdiv_qr(head.get_mpz_t(), rem.get_mpz_t(), m.get_mpz_t(), scale.get_mpz_t());
    exact = sgn(rem) == 0;
  }
  std::uint64_t mantissa = head.get_ui();
  if (exact) {
    while (mantissa % 10 == 0) mantissa /= 10;
  }
  const std::size_t mant_len = digit_length(mantissa, 10);
  const long double frac =
      std::log10(static_cast<long double>(mantissa) / pow10l(mant_len - 1));

  const int lead = leading_digit(mantissa, 10);
  const double lower = std::log10(static_cast<double>(lead));
  const double upper = lead == 9 ? 1.0 : std::log10(static_cast<double>(lead + 1));
  double f = static_cast<double>(frac);
  if (f < lower) f = lower;
  if (f >= upper) f = std::nextafter(upper, 0.0);
  return {static_cast<std::uint64_t>(len - 1), f};
}

PointSet log_fracparts(std::span<const BigInt> terms) {
  std::vector<double> out;
  out.reserve(terms.size());
  for (const auto& t : terms) out.push_back(log10_parts(t).fraction);
  return PointSet(std::move(out));
}

PointSet tail_points(const TailSpec& spec, std::uint64_t first, std::uint64_t N) {
  std::vector<double> out;
  out.reserve(N);
  const long double base = spec.base();
  for (std::uint64_t i = 0; i < N; ++i) {
    TailDigitStream stream(spec, first + i);
    std::array<int, kTailValueDigits> digits{};
    for (auto& d : digits) d = stream.next();
    long double v = 0.0L;
    for (auto it = digits.rbegin(); it != digits.rend(); ++it) v = (v + *it) / base;
    out.push_back(std::min(static_cast<double>(v), kBelowOne));
  }
  return PointSet(std::move(out));
}

std::array<double, 9> benford_reference() {
  std::array<double, 9> ref{};
  for (int c = 1; c <= 9; ++c) ref[c - 1] = std::log10(1.0 + 1.0 / c);
  return ref;
}

BenfordReport benford_report(std::span<const BigInt> terms) {
  if (terms.empty()) throw DomainError("benford_report of an empty stream");
  BenfordReport r;
  r.N = terms.size();
  LeadingDigitCensus c(10);
  for (const auto& t : terms) c.add(t);
  r.benford_freq = benford_reference();
  for (int d = 1; d <= 9; ++d) {
    r.digit_count[d - 1] = c[d];
    r.digit_freq[d - 1] = static_cast<double>(c[d]) / static_cast<double>(r.N);
    r.max_abs_gap = std::max(r.max_abs_gap, std::abs(r.digit_freq[d - 1] - r.benford_freq[d - 1]));
  }
  r.log_discrepancy = star_discrepancy(log_fracparts(terms));
  return r;
}

namespace {

long double log10_of(const BigInt& m) {
  const auto parts = log10_parts(m);
  return static_cast<long double>(parts.integer) + parts.fraction;
}

void check_log_domain(const IntPoly& poly, std::uint64_t n, int base) {
  check_base(base);
  if (n <= 1) throw DomainError("log ratio needs n >= 2 (log_b 1 = 0)");
  if (n < poly.n_min()) throw DomainError("n below the polynomial's certified n_min");
}

}  // namespace

double poly_log_ratio(const IntPoly& poly, std::uint64_t n, int base) {
  check_log_domain(poly, n, base);
  // The base cancels in the quotient.
  return static_cast<double>(log10_of(poly(big_from_u64(n))) / log10_of(big_from_u64(n)));
}

double poly_log_offset(const IntPoly& poly, std::uint64_t n, int base) {
  check_log_domain(poly, n, base);
  const long double diff = log10_of(poly(big_from_u64(n))) -
                           static_cast<long double>(poly.degree()) * log10_of(big_from_u64(n));
  return static_cast<double>(diff / std::log10(static_cast<long double>(base)));
}

}  // namespace concat_equidist
