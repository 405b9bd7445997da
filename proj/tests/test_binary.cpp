#include <cstdint>
#include <stdexcept>

#include <gtest/gtest.h>

#include "clbits/binary.hpp"

using namespace clbits;

namespace {

// C(n, k) by the multiplicative formula; exact for the small n used here.
std::uint64_t small_binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t c = 1;
  for (std::uint64_t i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

}  // namespace

TEST(Binary, BitExamples) {
  EXPECT_EQ(bit(4, 2), 1U);
  EXPECT_EQ(bit(4, 0), 0U);
  EXPECT_EQ(bit(6, 1), 1U);
  EXPECT_EQ(bit(6, 200), 0U);
}

TEST(Binary, SignBitExamples) {
  EXPECT_EQ(sign_bit(2, 1), SignBit::minus());
  for (unsigned i = 0; i < 70; ++i) EXPECT_EQ(sign_bit(0, i), SignBit::plus());
  EXPECT_EQ(sign_bit(5, 0), SignBit::minus());
}

TEST(Binary, NegativeInputsRejected) {
  EXPECT_THROW(bit(-1, 0), std::invalid_argument);
  EXPECT_THROW(sign_bit(-3, 1), std::invalid_argument);
  EXPECT_THROW(lucas_sign(-3, 1), std::invalid_argument);
  EXPECT_THROW(half_pochhammer_sign(-2), std::invalid_argument);
}

TEST(Binary, LucasExamples) {
  ASSERT_EQ(small_binomial(2, 2), 1U);
  EXPECT_EQ(lucas_sign(2, 1), SignBit::minus());
  ASSERT_EQ(small_binomial(4, 2), 6U);
  EXPECT_EQ(lucas_sign(4, 1), SignBit::plus());
  ASSERT_EQ(small_binomial(3, 1), 3U);
  EXPECT_EQ(lucas_sign(3, 0), SignBit::minus());
}

TEST(Binary, LucasAgreesWithSmallBinomialOracle) {
  for (std::uint64_t n = 0; n < 60; ++n)
    for (unsigned i = 0; i < 6; ++i) {
      const std::uint64_t c = small_binomial(n, std::uint64_t{1} << i);
      EXPECT_EQ(lucas_sign(static_cast<std::int64_t>(n), i), SignBit::from_bit(c & 1U)) << n << " " << i;
    }
}

TEST(Binary, LucasTheoremExhaustive) {
  for (std::int64_t n = 0; n < 4096; ++n)
    for (unsigned i = 0; i <= 12; ++i) ASSERT_EQ(lucas_sign(n, i), sign_bit(n, i)) << "n=" << n << " i=" << i;
}

TEST(Binary, HalfPochhammerExamples) {
  EXPECT_EQ(half_pochhammer_sign(2), SignBit::minus());
  EXPECT_EQ(half_pochhammer_sign(4), SignBit::plus());
  ASSERT_EQ(7 * 6 / 2, 21);
  EXPECT_EQ(half_pochhammer_sign(7), SignBit::minus());
}

TEST(Binary, LowBitsAreTheCommonSigns) {
  for (std::int64_t n = 0; n < 4096; ++n) {
    ASSERT_EQ(half_pochhammer_sign(n), sign_bit(n, 1)) << n;
    ASSERT_EQ(SignBit::from_bit(static_cast<unsigned>(n % 2)), sign_bit(n, 0)) << n;
  }
}

TEST(Binary, NegMod8) {
  EXPECT_EQ(neg_mod8(2), 6);
  EXPECT_EQ(neg_mod8(0), 0);
  EXPECT_EQ(neg_mod8(11), 5);
  for (std::int64_t n = -50; n <= 50; ++n) {
    const int r = neg_mod8(n);
    EXPECT_GE(r, 0);
    EXPECT_LT(r, 8);
    EXPECT_EQ((((n % 8) + 8) % 8 + r) % 8, 0) << n;
  }
}

TEST(Binary, Mod8HandlesNegatives) {
  EXPECT_EQ(mod8(-1), 7);
  EXPECT_EQ(mod8(-2), 6);
  EXPECT_EQ(mod8(-8), 0);
  EXPECT_EQ(mod8(13), 5);
  EXPECT_EQ(mod8(INT64_MIN), 0);
}

TEST(Binary, SignBitRoundTrip) {
  for (unsigned b = 0; b < 2; ++b) {
    const SignBit s = SignBit::from_bit(b);
    EXPECT_EQ(s.value(), 1 - 2 * static_cast<int>(b));
    EXPECT_EQ(s.bit(), b);
    EXPECT_EQ(SignBit::from_int(s.value()), s);
  }
  EXPECT_THROW(SignBit::from_int(0), std::invalid_argument);
  EXPECT_EQ(SignBit::minus() * SignBit::minus(), SignBit::plus());
  EXPECT_EQ(-SignBit::plus(), SignBit::minus());
}
