#include "concat_equidist/seqgen.hpp"

#include <algorithm>

#include "concat_equidist/errors.hpp"

namespace concat_equidist {

namespace {

// Scanning below the certification bound is linear in the bound.
constexpr std::uint64_t kMaxCertificationScan = 10'000'000;

BigInt binomial(int n, int k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

// 1 + floor(1 + max_{j < lead} |a_j| / a_lead): every real root of the
// polynomial lies strictly below this value.
BigInt root_bound(const std::vector<BigInt>& a) {
  const BigInt& lead = a.back();
  BigInt max_abs = 0;
  for (std::size_t j = 0; j + 1 < a.size(); ++j) max_abs = std::max<BigInt>(max_abs, abs(a[j]));
  BigInt q = max_abs / lead;
  return q + 2;
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return std::string(s.substr(b, e - b + 1));
}

}  // namespace

// -------------------------------------------------------------------- IntPoly

IntPoly::IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
  if (coeffs_.size() < 2) throw DomainError("polynomial must be non-constant");
  if (sgn(leading()) <= 0) throw DomainError("leading coefficient must be positive");

  const int d = degree();
  // Forward difference f(n+1) - f(n): coefficient of n^j is sum_{i>j} c_i C(i,j).
  std::vector<BigInt> diff(static_cast<std::size_t>(d), BigInt(0));
  for (int j = 0; j < d; ++j) {
    for (int i = j + 1; i <= d; ++i) diff[j] += coeffs_[i] * binomial(i, j);
  }
  std::vector<BigInt> shifted = coeffs_;
  shifted[0] -= 1;

  const BigInt bound = std::max(diff.size() > 1 ? root_bound(diff) : BigInt(1), root_bound(shifted));
  const auto limit = to_u64(bound);
  if (!limit || *limit > kMaxCertificationScan) {
    throw DomainError("cannot certify a monotone domain for " + to_string() +
                      ": root bound too large");
  }

  std::uint64_t last_bad = 0;
  BigInt prev = poly_eval(*this, BigInt(1));
  for (std::uint64_t n = 1; n < *limit; ++n) {
    BigInt next = poly_eval(*this, big_from_u64(n + 1));
    if (prev < 1 || next <= prev) last_bad = n;
    prev = std::move(next);
  }
  n_min_ = last_bad + 1;
}

IntPoly IntPoly::parse(std::string_view csv) {
  std::vector<BigInt> coeffs;
  std::size_t start = 0;
  while (true) {
    const auto comma = csv.find(',', start);
    const std::string field = trim(csv.substr(start, comma == std::string_view::npos
                                                         ? std::string_view::npos
                                                         : comma - start));
    auto v = parse_big(field);
    if (!v) throw DomainError("bad polynomial coefficient \"" + field + "\"");
    coeffs.push_back(*v);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return IntPoly(std::move(coeffs));
}

BigInt IntPoly::operator()(const BigInt& n) const { return poly_eval(*this, n); }

std::string IntPoly::to_string() const {
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const BigInt& c = coeffs_[i];
    if (sgn(c) == 0) continue;
    const BigInt mag = abs(c);
    if (out.empty()) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? "-" : "+";
    }
    if (mag != 1 || i == 0) out += mag.get_str();
    if (i >= 1) out += "n";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

BigInt poly_eval(const IntPoly& poly, const BigInt& n) {
  const auto& c = poly.coeffs();
  BigInt acc = c.back();
  for (auto it = c.rbegin() + 1; it != c.rend(); ++it) acc = acc * n + *it;
  return acc;
}

// ------------------------------------------------------------------- TailSpec

TailSpec TailSpec::champernowne(int base) {
  check_base(base);
  return TailSpec(TailKind::Champernowne, base, BigInt(1), std::nullopt);
}

TailSpec TailSpec::multiple(BigInt k, int base) {
  check_base(base);
  if (sgn(k) <= 0) throw DomainError("multiple tail requires k >= 1");
  return TailSpec(TailKind::Multiple, base, std::move(k), std::nullopt);
}

TailSpec TailSpec::polynomial(IntPoly poly, int base) {
  check_base(base);
  return TailSpec(TailKind::Polynomial, base, BigInt(0), std::move(poly));
}

const IntPoly& TailSpec::poly() const {
  if (!poly_) throw DomainError("tail spec has no polynomial");
  return *poly_;
}

std::uint64_t TailSpec::first_index() const noexcept {
  return poly_ ? poly_->n_min() : 1;
}

void TailSpec::require_decimal() const {
  if (base_ != 10) {
    throw DomainError("theorem constants are base-10 specific; got base " +
                      std::to_string(base_));
  }
}

std::string TailSpec::label() const {
  switch (kind_) {
    case TailKind::Champernowne: return "champ";
    case TailKind::Multiple: return "mult(k=" + k_.get_str() + ")";
    case TailKind::Polynomial: return "poly(" + poly_->to_string() + ")";
  }
  return {};
}

BigInt term(const TailSpec& spec, std::uint64_t n, std::uint64_t offset) {
  if (n == 0) throw DomainError("term index must be >= 1");
  if (n < spec.first_index()) {
    throw DomainError("index " + std::to_string(n) + " below certified n_min " +
                      std::to_string(spec.first_index()));
  }
  const BigInt idx = big_from_u64(n) + big_from_u64(offset);
  if (spec.kind() == TailKind::Polynomial) return poly_eval(spec.poly(), idx);
  return spec.k() * idx;
}

// ----------------------------------------------------------------- TermCursor

TermCursor::TermCursor(const TailSpec& spec, std::uint64_t n) : index_(n) {
  if (spec.kind() != TailKind::Polynomial) {
    diffs_ = {term(spec, n), spec.k()};
    return;
  }
  const int d = spec.poly().degree();
  for (int i = 0; i <= d; ++i) diffs_.push_back(term(spec, n, static_cast<std::uint64_t>(i)));
  // In-place difference table: diffs_[i] becomes the i-th forward difference.
  for (int level = 1; level <= d; ++level) {
    for (int i = d; i >= level; --i) diffs_[i] -= diffs_[i - 1];
  }
}

void TermCursor::advance() {
  for (std::size_t i = 0; i + 1 < diffs_.size(); ++i) diffs_[i] += diffs_[i + 1];
  ++index_;
}

// ------------------------------------------------------------ TailDigitStream

TailDigitStream::TailDigitStream(const TailSpec& spec, std::uint64_t n)
    : cursor_(spec, n), base_(spec.base()) {}

int TailDigitStream::next() {
  if (cursor_pos_ == buffer_.size()) {
    if (terms_ > 0) cursor_.advance();
    buffer_ = cursor_.value().get_str(base_);
    cursor_pos_ = 0;
    ++terms_;
  }
  const char c = buffer_[cursor_pos_++];
  ++produced_;
  return c <= '9' ? c - '0' : c - 'a' + 10;
}

DigitString tail_digits(const TailSpec& spec, std::uint64_t n, std::size_t p) {
  if (p == 0) throw DomainError("tail_digits requires p >= 1");
  TailDigitStream stream(spec, n);
  DigitString out(spec.base());
  for (std::size_t i = 0; i < p; ++i) out.push_back(stream.next());
  return out;
}

}  // namespace concat_equidist
