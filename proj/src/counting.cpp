#include "concat_equidist/counting.hpp"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>

#include "concat_equidist/errors.hpp"

namespace concat_equidist {

namespace {

// Below this many indices a single thread is faster than spawning workers.
constexpr std::uint64_t kMinParallelChunk = 1u << 16;

struct Membership {
  bool inside;
  std::size_t digits;
};

Membership decide(const TailSpec& spec, std::uint64_t n, const HalfOpenInterval& interval,
                  std::size_t max_digits) {
  TailDigitStream stream(spec, n);
  DigitString prefix(spec.base());
  while (true) {
    const PrefixOrder lo = compare_prefix(prefix, interval.lo());
    const PrefixOrder hi = compare_prefix(prefix, interval.hi());
    if (lo == PrefixOrder::DefinitelyLess || hi == PrefixOrder::DefinitelyGreaterOrEqual) {
      return {false, prefix.size()};
    }
    if (lo == PrefixOrder::DefinitelyGreaterOrEqual && hi == PrefixOrder::DefinitelyLess) {
      return {true, prefix.size()};
    }
    if (prefix.size() >= max_digits) {
      std::vector<int> consulted(prefix.digits().begin(), prefix.digits().end());
      throw UndecidedError("membership of x_" + std::to_string(n) + " in " +
                               interval.to_string() + " undecided after " +
                               std::to_string(prefix.size()) + " digits",
                           std::move(consulted));
    }
    prefix.push_back(stream.next());
  }
}

std::size_t default_budget(const TailSpec& spec, std::uint64_t n) {
  return 4 * digit_length(term(spec, n), spec.base()) + 16;
}

bool fast_path_applies(const HalfOpenInterval& interval) {
  return interval.lo().digits().size() <= 1 && interval.hi().digits().size() <= 1;
}

struct ChunkResult {
  std::uint64_t count = 0;
  std::size_t digits_max = 0;
  std::exception_ptr error;
};

ChunkResult count_chunk(const TailSpec& spec, const HalfOpenInterval& interval,
                        std::uint64_t first, std::uint64_t len, const CountOptions& options) {
  ChunkResult out;
  try {
    if (len == 0) return out;
    if (options.fast_path && fast_path_applies(interval)) {
      // x_n's first digit is a_n's leading digit; with one-digit endpoints
      // lo <= x_n < hi reduces to lo_digit <= lead < hi_digit.
      const int lo_digit = interval.lo().digit_at(1);
      const int hi_digit = interval.hi().is_one() ? spec.base() : interval.hi().digit_at(1);
      TermCursor cursor(spec, first);
      for (std::uint64_t i = 0; i < len; ++i) {
        if (i > 0) cursor.advance();
        const int lead = leading_digit(cursor.value(), spec.base());
        if (lead >= lo_digit && lead < hi_digit) ++out.count;
      }
      out.digits_max = 1;
      return out;
    }
    for (std::uint64_t i = 0; i < len; ++i) {
      const std::uint64_t n = first + i;
      const std::size_t budget =
          options.max_digits != 0 ? options.max_digits : default_budget(spec, n);
      const Membership m = decide(spec, n, interval, budget);
      if (m.inside) ++out.count;
      out.digits_max = std::max(out.digits_max, m.digits);
    }
  } catch (...) {
    out.error = std::current_exception();
  }
  return out;
}

}  // namespace

unsigned default_thread_count() {
  if (const char* env = std::getenv("CONCAT_EQUIDIST_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

bool in_interval(const TailSpec& spec, std::uint64_t n, const HalfOpenInterval& interval,
                 std::size_t max_digits) {
  if (spec.base() != interval.base()) throw DomainError("in_interval: base mismatch");
  if (max_digits == 0) throw DomainError("in_interval: max_digits must be >= 1");
  return decide(spec, n, interval, max_digits).inside;
}

bool in_interval(const TailSpec& spec, std::uint64_t n, const HalfOpenInterval& interval) {
  return in_interval(spec, n, interval, default_budget(spec, n));
}

std::uint64_t count_range(const TailSpec& spec, const HalfOpenInterval& interval,
                          std::uint64_t first, std::uint64_t N, const CountOptions& options,
                          std::size_t* digits_consulted_max) {
  if (spec.base() != interval.base()) throw DomainError("count: base mismatch");
  if (first < spec.first_index()) {
    throw DomainError("count: first index below " + std::to_string(spec.first_index()));
  }
  const unsigned requested = options.threads != 0 ? options.threads : default_thread_count();
  const std::uint64_t max_workers = std::max<std::uint64_t>(1, N / kMinParallelChunk);
  const auto workers = static_cast<unsigned>(std::min<std::uint64_t>(requested, max_workers));

  std::vector<ChunkResult> results(workers);
  const std::uint64_t base_len = N / workers;
  const std::uint64_t extra = N % workers;
  std::vector<std::thread> pool;
  std::uint64_t start = first;
  for (unsigned w = 0; w < workers; ++w) {
    const std::uint64_t len = base_len + (w < extra ? 1 : 0);
    if (w + 1 == workers) {
      results[w] = count_chunk(spec, interval, start, len, options);
    } else {
      pool.emplace_back([&, w, start, len] {
        results[w] = count_chunk(spec, interval, start, len, options);
      });
    }
    start += len;
  }
  for (auto& t : pool) t.join();

  std::uint64_t total = 0;
  std::size_t digits_max = 0;
  for (const auto& r : results) {
    if (r.error) std::rethrow_exception(r.error);
    total += r.count;
    digits_max = std::max(digits_max, r.digits_max);
  }
  if (digits_consulted_max) *digits_consulted_max = digits_max;
  return total;
}

CountResult count_A(const TailSpec& spec, const HalfOpenInterval& interval, std::uint64_t N,
                    const CountOptions& options) {
  if (N == 0) throw DomainError("count_A requires N >= 1");
  CountResult out{interval, N, spec.first_index(), 0, 0.0, 0};
  out.count = count_range(spec, interval, out.first_index, N, options, &out.digits_consulted_max);
  out.ratio = static_cast<double>(out.count) / static_cast<double>(N);
  return out;
}

int leading_digit(std::uint64_t m, int base) {
  check_base(base);
  if (m == 0) throw DomainError("leading_digit requires m >= 1");
  const auto b = static_cast<std::uint64_t>(base);
  while (m >= b) m /= b;
  return static_cast<int>(m);
}

int leading_digit(const BigInt& m, int base) {
  check_base(base);
  if (sgn(m) <= 0) throw DomainError("leading_digit requires m >= 1");
  if (mpz_fits_ulong_p(m.get_mpz_t())) return leading_digit(std::uint64_t{mpz_get_ui(m.get_mpz_t())}, base);
  const std::size_t len = digit_length(m, base);
  BigInt q;
  mpz_tdiv_q(q.get_mpz_t(), m.get_mpz_t(),
             big_pow(static_cast<unsigned long>(base), len - 1).get_mpz_t());
  return static_cast<int>(q.get_ui());
}

// ------------------------------------------------------------------- census

LeadingDigitCensus::LeadingDigitCensus(int base)
    : base_(base), counts_(static_cast<std::size_t>(base), 0) {
  check_base(base);
}

void LeadingDigitCensus::add(const BigInt& term) {
  ++counts_[static_cast<std::size_t>(leading_digit(term, base_))];
  ++total_;
}

void LeadingDigitCensus::add(std::uint64_t term) {
  ++counts_[static_cast<std::size_t>(leading_digit(term, base_))];
  ++total_;
}

std::vector<std::uint64_t> census(std::span<const BigInt> terms, int base) {
  if (terms.empty()) throw DomainError("census of an empty stream");
  LeadingDigitCensus c(base);
  for (const auto& t : terms) c.add(t);
  return c.counts();
}

}  // namespace concat_equidist
