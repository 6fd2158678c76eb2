#include "concat_equidist/exactnum.hpp"

#include <algorithm>
#include <cctype>

#include "concat_equidist/errors.hpp"

namespace concat_equidist {

namespace {

int char_digit(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  const auto lower = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (lower >= 'a' && lower <= 'z') return lower - 'a' + 10;
  return -1;
}

}  // namespace

std::optional<BigInt> parse_big(const std::string& text) {
  std::size_t i = 0;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) i = 1;
  if (i == text.size()) return std::nullopt;
  for (std::size_t j = i; j < text.size(); ++j) {
    if (text[j] < '0' || text[j] > '9') return std::nullopt;
  }
  BigInt out;
  out.set_str(text[0] == '+' ? text.substr(1) : text, 10);
  return out;
}

void check_base(int base) {
  if (base < kMinBase || base > kMaxBase) {
    throw DomainError("base " + std::to_string(base) + " outside [2,36]");
  }
}

char digit_char(int d) {
  return static_cast<char>(d < 10 ? '0' + d : 'a' + (d - 10));
}

// ---------------------------------------------------------------- DigitString

DigitString::DigitString(int base) : base_(base) { check_base(base); }

DigitString::DigitString(int base, std::vector<std::uint8_t> digits)
    : base_(base), digits_(std::move(digits)) {
  check_base(base);
  for (auto d : digits_) {
    if (d >= base_) throw DomainError("digit out of range for base");
  }
}

void DigitString::push_back(int digit) {
  if (digit < 0 || digit >= base_) throw DomainError("digit out of range for base");
  digits_.push_back(static_cast<std::uint8_t>(digit));
}

void DigitString::append(const DigitString& other) {
  if (other.base_ != base_) throw DomainError("base mismatch in DigitString::append");
  digits_.insert(digits_.end(), other.digits_.begin(), other.digits_.end());
}

void DigitString::truncate(std::size_t p) {
  if (p < digits_.size()) digits_.resize(p);
}

std::string DigitString::to_string() const {
  std::string out;
  out.reserve(digits_.size());
  for (auto d : digits_) out.push_back(digit_char(d));
  return out;
}

// -------------------------------------------------------------- ExactEndpoint

ExactEndpoint ExactEndpoint::zero(int base) {
  check_base(base);
  return ExactEndpoint(base, {}, false);
}

ExactEndpoint ExactEndpoint::one(int base) {
  check_base(base);
  return ExactEndpoint(base, {}, true);
}

ExactEndpoint ExactEndpoint::from_digits(int base, std::vector<std::uint8_t> digits) {
  check_base(base);
  for (auto d : digits) {
    if (d >= base) throw DomainError("digit out of range for base");
  }
  while (!digits.empty() && digits.back() == 0) digits.pop_back();
  return ExactEndpoint(base, std::move(digits), false);
}

ExactEndpoint ExactEndpoint::parse(std::string_view text, int base) {
  check_base(base);
  const std::string original(text);
  const auto bad = [&](const char* why) {
    return DomainError("endpoint \"" + original + "\": " + why);
  };
  if (text.empty()) throw bad("empty");

  const auto dot = text.find('.');
  const std::string_view int_part = text.substr(0, dot);
  const std::string_view frac_part =
      dot == std::string_view::npos ? std::string_view{} : text.substr(dot + 1);
  if (int_part.empty() && frac_part.empty()) throw bad("no digits");

  std::vector<std::uint8_t> frac;
  for (char c : frac_part) {
    const int d = char_digit(c);
    if (d < 0 || d >= base) throw bad("not a terminating base-b numeral");
    frac.push_back(static_cast<std::uint8_t>(d));
  }
  int whole = 0;
  for (char c : int_part) {
    const int d = char_digit(c);
    if (d < 0 || d >= base) throw bad("not a terminating base-b numeral");
    if (whole > 1) throw bad("outside [0,1]");
    whole = whole * base + d;
  }
  if (whole > 1) throw bad("outside [0,1]");
  if (whole == 1) {
    if (std::any_of(frac.begin(), frac.end(), [](auto d) { return d != 0; })) {
      throw bad("outside [0,1]");
    }
    return one(base);
  }
  return from_digits(base, std::move(frac));
}

double ExactEndpoint::to_double() const {
  if (one_) return 1.0;
  double v = 0.0;
  for (auto it = digits_.rbegin(); it != digits_.rend(); ++it) v = (v + *it) / base_;
  return v;
}

std::string ExactEndpoint::to_string() const {
  if (one_) return "1";
  if (digits_.empty()) return "0";
  std::string out = "0.";
  for (auto d : digits_) out.push_back(digit_char(d));
  return out;
}

std::strong_ordering operator<=>(const ExactEndpoint& a, const ExactEndpoint& b) {
  if (a.base_ != b.base_) throw DomainError("comparing endpoints of different bases");
  if (a.one_ || b.one_) return a.one_ <=> b.one_;
  const std::size_t n = std::max(a.digits_.size(), b.digits_.size());
  for (std::size_t i = 1; i <= n; ++i) {
    if (auto c = a.digit_at(i) <=> b.digit_at(i); c != 0) return c;
  }
  return std::strong_ordering::equal;
}

// ----------------------------------------------------------- HalfOpenInterval

HalfOpenInterval::HalfOpenInterval(ExactEndpoint lo, ExactEndpoint hi)
    : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (lo_.base() != hi_.base()) throw DomainError("interval endpoints differ in base");
  if (!(lo_ < hi_)) throw DomainError("interval requires lo < hi");
}

std::string HalfOpenInterval::to_string() const {
  return "[" + lo_.to_string() + "," + hi_.to_string() + ")";
}

// ------------------------------------------------------------------ digits

DigitString int_to_digits(const BigInt& n, int base) {
  check_base(base);
  if (sgn(n) <= 0) throw DomainError("int_to_digits requires n >= 1");
  const std::string s = n.get_str(base);
  std::vector<std::uint8_t> digits;
  digits.reserve(s.size());
  for (char c : s) digits.push_back(static_cast<std::uint8_t>(char_digit(c)));
  return DigitString(base, std::move(digits));
}

BigInt digits_to_int(const DigitString& digits) {
  BigInt out = 0;
  for (auto d : digits.digits()) out = out * digits.base() + d;
  return out;
}

std::size_t digit_length(std::uint64_t n, int base) {
  check_base(base);
  if (n == 0) throw DomainError("digit_length requires n >= 1");
  const auto b = static_cast<std::uint64_t>(base);
  std::size_t len = 1;
  // p * b <= n  <=>  p <= n / b, so the power never overflows.
  for (std::uint64_t p = 1; p <= n / b; p *= b) ++len;
  return len;
}

std::size_t digit_length(const BigInt& n, int base) {
  check_base(base);
  if (sgn(n) <= 0) throw DomainError("digit_length requires n >= 1");
  if (auto small = to_u64(n)) return digit_length(*small, base);
  // mpz_sizeinbase is exact or one too large.
  std::size_t s = mpz_sizeinbase(n.get_mpz_t(), base);
  BigInt lower;
  mpz_ui_pow_ui(lower.get_mpz_t(), static_cast<unsigned long>(base), s - 1);
  if (n < lower) --s;
  return s;
}

PrefixOrder compare_prefix(const DigitString& prefix, const ExactEndpoint& e) {
  if (prefix.base() != e.base()) throw DomainError("compare_prefix: base mismatch");
  if (e.is_one()) return PrefixOrder::DefinitelyLess;
  const std::size_t p = prefix.size();
  for (std::size_t i = 1; i <= p; ++i) {
    const int pd = prefix[i - 1];
    const int ed = e.digit_at(i);
    if (pd < ed) return PrefixOrder::DefinitelyLess;
    if (pd > ed) return PrefixOrder::DefinitelyGreaterOrEqual;
  }
  // prefix agrees with e on p digits; e's canonical tail beyond p is nonzero
  // iff e has more digits.
  return e.digits().size() <= p ? PrefixOrder::DefinitelyGreaterOrEqual
                                : PrefixOrder::Undecided;
}

}  // namespace concat_equidist
