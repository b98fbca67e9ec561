#include "lexicov/fraction.h"

#include <charconv>
#include <numeric>

#include "lexicov/error.h"

namespace lexicov {

namespace {

__extension__ using u128 = unsigned __int128;

Fraction reduce128(u128 num, u128 den) {
  u128 a = num, b = den;
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  if (a > 1) {
    num /= a;
    den /= a;
  }
  if (num > UINT64_MAX || den > UINT64_MAX)
    throw Error(ErrorCode::kInvalidArgument, "fraction overflow");
  return Fraction(static_cast<std::uint64_t>(num), static_cast<std::uint64_t>(den));
}

std::uint64_t parse_u64(std::string_view digits, std::string_view whole) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
  if (ec != std::errc() || ptr != digits.data() + digits.size())
    throw Error(ErrorCode::kInvalidArgument, "not a number: '" + std::string(whole) + "'");
  return v;
}

}  // namespace

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "INVALID_ARGUMENT";
    case ErrorCode::kEmptyInput: return "EMPTY_INPUT";
    case ErrorCode::kConfigMismatch: return "CONFIG_MISMATCH";
    case ErrorCode::kMalformedRow: return "MALFORMED_ROW";
    case ErrorCode::kRangeTooSmall: return "RANGE_TOO_SMALL";
    case ErrorCode::kInvalidUtf8: return "INVALID_UTF8";
    case ErrorCode::kIo: return "IO_ERROR";
  }
  return "UNKNOWN";
}

Fraction::Fraction(std::uint64_t num, std::uint64_t den) {
  if (den == 0) throw Error(ErrorCode::kInvalidArgument, "fraction with zero denominator");
  std::uint64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

Fraction operator+(const Fraction& a, const Fraction& b) {
  if (a.den_ == b.den_) return reduce128(u128(a.num_) + b.num_, a.den_);
  return reduce128(u128(a.num_) * b.den_ + u128(b.num_) * a.den_, u128(a.den_) * b.den_);
}

Fraction operator-(const Fraction& a, const Fraction& b) {
  u128 lhs = u128(a.num_) * b.den_;
  u128 rhs = u128(b.num_) * a.den_;
  if (rhs > lhs) throw Error(ErrorCode::kInvalidArgument, "negative fraction");
  return reduce128(lhs - rhs, u128(a.den_) * b.den_);
}

std::strong_ordering operator<=>(const Fraction& a, const Fraction& b) {
  return u128(a.num_) * b.den_ <=> u128(b.num_) * a.den_;
}

std::string Fraction::to_decimal(int places) const {
  u128 scale = 1;
  for (int i = 0; i < places; ++i) scale *= 10;
  u128 scaled = (u128(num_) * scale * 2 + den_) / (u128(den_) * 2);
  u128 whole = scaled / scale;
  u128 frac = scaled % scale;
  std::string out = std::to_string(static_cast<std::uint64_t>(whole));
  if (places > 0) {
    std::string digits = std::to_string(static_cast<std::uint64_t>(frac));
    out += '.';
    out.append(static_cast<std::size_t>(places) - digits.size(), '0');
    out += digits;
  }
  return out;
}

std::string Fraction::to_string() const {
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Fraction Fraction::parse(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  if (s.empty()) throw Error(ErrorCode::kInvalidArgument, "empty number");

  bool percent = false;
  if (s.back() == '%') {
    percent = true;
    s.remove_suffix(1);
  }
  if (auto slash = s.find('/'); slash != std::string_view::npos && !percent) {
    return Fraction(parse_u64(s.substr(0, slash), text), parse_u64(s.substr(slash + 1), text));
  }

  std::string_view int_part = s, frac_part;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    int_part = s.substr(0, dot);
    frac_part = s.substr(dot + 1);
  }
  if ((int_part.empty() && frac_part.empty()) || frac_part.size() > 18)
    throw Error(ErrorCode::kInvalidArgument, "not a number: '" + std::string(text) + "'");

  std::uint64_t den = 1;
  for (std::size_t i = 0; i < frac_part.size(); ++i) den *= 10;
  std::uint64_t whole = int_part.empty() ? 0 : parse_u64(int_part, text);
  std::uint64_t frac = frac_part.empty() ? 0 : parse_u64(frac_part, text);
  u128 num = u128(whole) * den + frac;
  u128 d = den;
  if (percent) d *= 100;
  return reduce128(num, d);
}

}  // namespace lexicov
