#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "qlimit/phase.hpp"

using qlimit::Rational;
using qlimit::RationalAngle;
using qlimit::ZetaPhase;

TEST(RationalAngle, ReducesIntoHalfOpenRange) {
  EXPECT_EQ(RationalAngle(Rational(5, 2)).pi_multiple(), Rational(1, 2));
  EXPECT_EQ(RationalAngle(Rational(-1, 3)).pi_multiple(), Rational(5, 3));
  EXPECT_EQ(RationalAngle(Rational(2)).pi_multiple(), Rational(0));
  EXPECT_TRUE(RationalAngle(Rational(-4)).is_zero());
}

TEST(RationalAngle, QuarterTurnsAreExact) {
  EXPECT_EQ(RationalAngle(0, 1).to_complex(), std::complex<double>(1, 0));
  EXPECT_EQ(RationalAngle(1, 2).to_complex(), std::complex<double>(0, 1));
  EXPECT_EQ(RationalAngle(1, 1).to_complex(), std::complex<double>(-1, 0));
  EXPECT_EQ(RationalAngle(3, 2).to_complex(), std::complex<double>(0, -1));
}

TEST(RationalAngle, ToComplexMatchesPolar) {
  for (int den = 1; den <= 40; ++den)
    for (int num = -2 * den; num <= 2 * den; ++num) {
      const RationalAngle a(num, den);
      const auto z = a.to_complex();
      const auto ref = std::polar(1.0, std::numbers::pi * num / den);
      EXPECT_LT(std::abs(z - ref), 1e-14) << num << "/" << den;
      EXPECT_NEAR(std::abs(z), 1.0, 1e-15);
    }
}

TEST(RationalAngle, IntegerMultipleIsRepeatedAddition) {
  const RationalAngle a(-1, 7);
  RationalAngle sum;
  for (int k = 0; k < 40; ++k) {
    EXPECT_EQ(k * a, sum) << k;
    sum += a;
  }
  EXPECT_EQ(7 * a, RationalAngle(1, 1));
  EXPECT_EQ(14 * a, RationalAngle::zero());
}

TEST(RationalAngle, LargeMultiplesDoNotOverflow) {
  const RationalAngle a(-1, 1'000'003);
  const std::int64_t big = 9'000'000'000'000'000'000LL;
  const RationalAngle r = big * a;
  const std::int64_t period = 2 * 1'000'003;
  EXPECT_EQ(r, (big % period) * a);
}

TEST(RationalAngle, GroupLaws) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> num(-50, 50), den(1, 30);
  for (int trial = 0; trial < 500; ++trial) {
    const RationalAngle a(num(rng), den(rng)), b(num(rng), den(rng)), c(num(rng), den(rng));
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ(a + b, b + a);
    EXPECT_TRUE((a - a).is_zero());
    EXPECT_EQ(a + (-a), RationalAngle::zero());
  }
}

TEST(RationalAngle, FullTurns) {
  EXPECT_EQ(RationalAngle::full_turns(Rational(1, 4)), RationalAngle(1, 2));
  EXPECT_TRUE(RationalAngle::full_turns(Rational(3)).is_zero());
}

TEST(ZetaPhase, ValueTimesNIsOneMinusN) {
  for (std::int64_t n = 1; n <= 200; ++n) {
    const ZetaPhase z(n);
    EXPECT_EQ(z.value() * n, Rational(1 - n));
  }
}

TEST(ZetaPhase, TurnsMatchRootsOfUnity) {
  for (std::int64_t n = 1; n <= 40; ++n) {
    const ZetaPhase z(n);
    for (std::int64_t k = -2 * n; k <= 3 * n; ++k) {
      const auto lhs = z.turns(k).to_complex();
      const auto rhs = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n));
      EXPECT_LT(std::abs(lhs - rhs), 1e-14) << "N=" << n << " k=" << k;
      EXPECT_EQ(z.turns(k), RationalAngle::full_turns(Rational(k, n)));
    }
  }
}

TEST(ZetaPhase, RejectsNonPositiveN) {
  EXPECT_THROW(ZetaPhase(0), std::domain_error);
  EXPECT_THROW(ZetaPhase(-3), std::domain_error);
}
