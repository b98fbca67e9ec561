#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace lexicov {

/// Non-negative exact rational. Always stored reduced, so member-wise
/// equality is value equality. Coverage values are count/N and are kept in
/// this form until they are printed.
class Fraction {
 public:
  constexpr Fraction() = default;
  Fraction(std::uint64_t num, std::uint64_t den);

  std::uint64_t num() const noexcept { return num_; }
  std::uint64_t den() const noexcept { return den_; }

  double to_double() const noexcept {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  /// Fixed-point decimal, half-up rounding ("0.9500" for places = 4).
  std::string to_decimal(int places = 4) const;
  /// "num/den"
  std::string to_string() const;

  /// Parses "0.95", "1", "95%", "12.5%" or "19/20" exactly.
  static Fraction parse(std::string_view text);

  friend Fraction operator+(const Fraction& a, const Fraction& b);
  friend Fraction operator-(const Fraction& a, const Fraction& b);
  Fraction& operator+=(const Fraction& o) { return *this = *this + o; }

  friend bool operator==(const Fraction& a, const Fraction& b) = default;
  friend std::strong_ordering operator<=>(const Fraction& a, const Fraction& b);

 private:
  std::uint64_t num_ = 0;
  std::uint64_t den_ = 1;
};

}  // namespace lexicov
