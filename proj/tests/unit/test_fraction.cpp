#include <gtest/gtest.h>

#include "lexicov/error.h"
#include "lexicov/fraction.h"

using lexicov::Error;
using lexicov::ErrorCode;
using lexicov::Fraction;

TEST(Fraction, StoresReduced) {
  Fraction f(20, 1000);
  EXPECT_EQ(f.num(), 1u);
  EXPECT_EQ(f.den(), 50u);
  EXPECT_EQ(Fraction(0, 7), Fraction(0, 1));
  EXPECT_THROW(Fraction(1, 0), Error);
}

TEST(Fraction, AdditionIsExact) {
  EXPECT_EQ(Fraction(20, 1000) + Fraction(10, 1000), Fraction(3, 100));
  Fraction sum;
  for (int i = 0; i < 7; ++i) sum += Fraction(1, 7);
  EXPECT_EQ(sum, Fraction(1, 1));
  EXPECT_EQ(Fraction(3, 4) - Fraction(1, 4), Fraction(1, 2));
  EXPECT_THROW(Fraction(1, 4) - Fraction(3, 4), Error);
}

TEST(Fraction, OrdersByValue) {
  EXPECT_LT(Fraction(1, 3), Fraction(34, 100));
  EXPECT_GT(Fraction(2, 3), Fraction(666666, 1000000));
  EXPECT_EQ(Fraction(19, 20) <=> Fraction(95, 100), std::strong_ordering::equal);
  // Large operands must not overflow the cross-multiplication.
  std::uint64_t big = (1ull << 62) + 1;
  EXPECT_LT(Fraction(big - 1, big), Fraction(big, big + 1));
}

TEST(Fraction, ParsesDecimalPercentAndRatio) {
  EXPECT_EQ(Fraction::parse("0.95"), Fraction(19, 20));
  EXPECT_EQ(Fraction::parse("95%"), Fraction(19, 20));
  EXPECT_EQ(Fraction::parse("12.5%"), Fraction(1, 8));
  EXPECT_EQ(Fraction::parse("19/20"), Fraction(19, 20));
  EXPECT_EQ(Fraction::parse("1"), Fraction(1, 1));
  for (const char* bad : {"", "-0.5", "abc", "1/0", "0.9.5", "%", "5/"})
    EXPECT_THROW(Fraction::parse(bad), Error) << bad;
}

TEST(Fraction, PrintsDecimalWithHalfUpRounding) {
  EXPECT_EQ(Fraction(19, 20).to_decimal(4), "0.9500");
  EXPECT_EQ(Fraction(2, 3).to_decimal(4), "0.6667");
  EXPECT_EQ(Fraction(1, 8).to_decimal(2), "0.13");
  EXPECT_EQ(Fraction(1, 1).to_decimal(4), "1.0000");
  EXPECT_EQ(Fraction(1, 3).to_decimal(0), "0");
  EXPECT_EQ(Fraction(24584, 25877).to_string(), "24584/25877");
}
