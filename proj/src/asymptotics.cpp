#include "concat_equidist/asymptotics.hpp"

#include <cmath>
#include <numbers>

#include "concat_equidist/errors.hpp"

namespace concat_equidist {

namespace {

long double log_big(const BigInt& m) {
  long exp2 = 0;
  const double mant = mpz_get_d_2exp(&exp2, m.get_mpz_t());
  return std::log(static_cast<long double>(mant)) +
         static_cast<long double>(exp2) * std::numbers::ln2_v<long double>;
}

BigInt two_times_ten_pow(int j) { return 2 * big_pow(10, static_cast<unsigned long>(j)); }

}  // namespace

BigInt lemma1_main_term(const BigInt& k, unsigned J) {
  if (sgn(k) <= 0) throw DomainError("lemma1_main_term requires k >= 1");
  BigInt sum = 0;
  BigInt power = 1;
  for (unsigned i = 0; i <= J; ++i) {
    sum += power / k;
    power *= 10;
  }
  return sum;
}

LinearSubsequence subsequence_points_linear(const BigInt& k, int j_max) {
  if (sgn(k) <= 0) throw DomainError("subsequence_points_linear requires k >= 1");
  LinearSubsequence out;
  // j > (log k - log 2) / log 10  <=>  2 * 10^j > k
  while (two_times_ten_pow(out.first_valid_j) <= k) ++out.first_valid_j;
  for (int j = out.first_valid_j; j <= j_max; ++j) {
    const BigInt n_j = two_times_ten_pow(j) / k;
    const auto small = to_u64(n_j);
    if (!small) throw DomainError("subsequence point exceeds 64-bit index range");
    out.points.push_back({j, *small});
  }
  return out;
}

BigInt poly_floor_inverse(const IntPoly& poly, const BigInt& m) {
  BigInt lo = big_from_u64(poly.n_min());
  if (poly(lo) > m) {
    throw DomainError("poly_floor_inverse: m = " + m.get_str() + " below f(n_min) = " +
                      poly(lo).get_str());
  }
  // Gallop to bracket f(lo) <= m < f(lo + step), then bisect.
  BigInt step = 1;
  while (poly(lo + step) <= m) {
    lo += step;
    step *= 2;
  }
  BigInt hi = lo + step;
  while (hi - lo > 1) {
    BigInt mid = (lo + hi) / 2;
    if (poly(mid) <= m) {
      lo = std::move(mid);
    } else {
      hi = std::move(mid);
    }
  }
  return lo;
}

double inverse_epsilon(const IntPoly& poly, const BigInt& m) {
  const BigInt g = poly_floor_inverse(poly, m);
  const long double root =
      std::exp((log_big(m) - log_big(poly.leading())) / static_cast<long double>(poly.degree()));
  return static_cast<double>(static_cast<long double>(g.get_d()) - root);
}

std::vector<ScanPoint> subsequence_points_poly(const IntPoly& poly, int J_max) {
  std::vector<ScanPoint> out;
  const BigInt floor_value = poly(big_from_u64(poly.n_min()));
  for (int J = 1; J <= J_max; ++J) {
    const BigInt m = two_times_ten_pow(J);
    if (m < floor_value) continue;
    const BigInt count = poly_floor_inverse(poly, m) - big_from_u64(poly.n_min()) + 1;
    const auto N = to_u64(count);
    if (!N) throw DomainError("subsequence point exceeds 64-bit index range");
    if (!out.empty() && *N <= out.back().N) continue;
    out.push_back({J, *N});
  }
  return out;
}

double lemma2_main_term(const IntPoly& poly, unsigned J) {
  if (J == 0) throw DomainError("lemma2_main_term requires J >= 1");
  const long double d = poly.degree();
  const long double scale =
      std::expm1(std::numbers::ln2_v<long double> / d) / std::exp(log_big(poly.leading()) / d);
  long double sum = 0;
  for (unsigned i = 1; i <= J; ++i) {
    sum += std::pow(10.0L, static_cast<long double>(i) / d);
  }
  return static_cast<double>(scale * sum);
}

double y_value(int d) {
  if (d < 1) throw DomainError("y_value requires d >= 1");
  const long double x = 1.0L / d;
  const long double ln10 = std::log(10.0L);
  return static_cast<double>(std::exp(x * std::log(5.0L)) *
                             std::expm1(x * std::numbers::ln2_v<long double>) /
                             (2.0L * std::expm1(x * ln10)));
}

double y_limit() {
  return static_cast<double>(std::numbers::ln2_v<long double> / (2.0L * std::log(10.0L)));
}

LimitConstants limit_constants(int d) {
  LimitConstants c;
  c.d = d;
  c.paper_lower_bound = y_value(d);
  c.scan_limit = 2.0 * c.paper_lower_bound;
  c.baseline_density = 1.0 / 9.0;
  return c;
}

std::vector<double> y_sequence(int d_max) {
  if (d_max < 1) throw DomainError("y_sequence requires d_max >= 1");
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(d_max));
  for (int d = 1; d <= d_max; ++d) out.push_back(y_value(d));
  return out;
}

RatioScanReport ratio_scan(const TailSpec& spec, const HalfOpenInterval& interval,
                           const std::vector<ScanPoint>& points, const CountOptions& options) {
  spec.require_decimal();
  if (points.empty()) throw DomainError("ratio_scan requires at least one point");
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (points[i].N <= points[i - 1].N) throw DomainError("ratio_scan: N must increase");
  }

  RatioScanReport report;
  report.spec_label = spec.label();
  report.interval = interval.to_string();
  if (spec.kind() == TailKind::Polynomial) {
    report.kind = ScanKind::Polynomial;
    report.degree = spec.poly().degree();
  }
  report.constants = limit_constants(report.degree);
  report.target_constant = report.constants.scan_limit;

  // Counts are cumulative, so each point only extends the previous range.
  std::uint64_t count = 0;
  std::uint64_t covered = 0;
  for (const auto& p : points) {
    count += count_range(spec, interval, spec.first_index() + covered, p.N - covered, options);
    covered = p.N;

    RatioScanRecord r;
    r.j = p.j;
    r.N = p.N;
    r.count = count;
    r.ratio = static_cast<double>(count) / static_cast<double>(p.N);
    if (report.kind == ScanKind::Linear) {
      r.main_term = lemma1_main_term(spec.k(), static_cast<unsigned>(p.j)).get_d();
    } else {
      r.main_term = lemma2_main_term(spec.poly(), static_cast<unsigned>(p.j));
    }
    r.residual = static_cast<double>(count) - r.main_term;
    report.records.push_back(r);
  }
  return report;
}

}  // namespace concat_equidist
