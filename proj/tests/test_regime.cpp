#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "dem/errors.hpp"
#include "dem/regime.hpp"

using namespace dem;

namespace {

std::vector<double> positions(double x_min, double x_max, int n) {
  std::vector<double> x;
  for (int j = 0; j <= n; ++j) x.push_back(x_min + (x_max - x_min) * j / n);
  return x;
}

} // namespace

TEST(Regime, ConstantField) {
  const RegimeField f = init_field(ConstantRegime{0.0}, positions(-1, 1, 10), -1, 1);
  ASSERT_EQ(f.size(), 11u);
  for (double r : f.values()) EXPECT_EQ(r, 0.0);
  EXPECT_TRUE(f.is_static());
  EXPECT_THROW(init_field(ConstantRegime{1.5}, positions(-1, 1, 10), -1, 1), ConfigError);
}

TEST(Regime, ReferencePiecewiseProfile) {
  const std::vector<double> x = {-0.9, -0.6, -0.52, 0.0, 0.5, 0.761, 0.9};
  const RegimeField f = init_field(reference_piecewise_regime(), x, -1, 1);
  EXPECT_EQ(f[0], 0.13);
  EXPECT_EQ(f[1], 0.13);
  EXPECT_EQ(f[2], 0.47);  // a breakpoint belongs to the piece on its right
  EXPECT_EQ(f[3], 0.47);
  EXPECT_EQ(f[4], 1.0);
  EXPECT_EQ(f[5], 0.69);
  EXPECT_EQ(f[6], 0.69);
}

TEST(Regime, PiecewiseValidation) {
  const auto x = positions(-1, 1, 4);
  EXPECT_THROW(init_field(PiecewiseRegime{{1.5}, {0.1, 0.2}}, x, -1, 1), ConfigError);
  EXPECT_THROW(init_field(PiecewiseRegime{{0.2, 0.1}, {0.1, 0.2, 0.3}}, x, -1, 1), ConfigError);
  EXPECT_THROW(init_field(PiecewiseRegime{{0.0}, {0.1}}, x, -1, 1), ConfigError);
  EXPECT_THROW(init_field(PiecewiseRegime{{0.0}, {0.1, 1.2}}, x, -1, 1), ConfigError);
}

TEST(Regime, StochasticZeroEpsilonLeavesFieldUnchanged) {
  RegimeField f = init_field(StochasticRegime{0.0, 0.3, 7}, positions(0, 1, 50), 0, 1);
  for (int s = 0; s < 100; ++s) f.advance();
  for (double r : f.values()) EXPECT_EQ(r, 0.3);
}

TEST(Regime, ClampKeepsUpperBound) {
  // Starting at 1, every positive draw is clipped back to 1.
  std::mt19937_64 rng(3);
  std::vector<double> v(1000, 1.0);
  std::mt19937_64 probe = rng;
  stochastic_update(v, 0.5, rng);
  for (double r : v) {
    const double q = 2.0 * uniform01(probe) - 1.0;
    if (q >= 0.0) EXPECT_EQ(r, 1.0);
    else EXPECT_DOUBLE_EQ(r, 1.0 + 0.5 * q);
  }
}

TEST(Regime, StochasticIsDeterministicForASeed) {
  const auto x = positions(-1, 1, 300);
  RegimeField a = init_field(StochasticRegime{0.05, 0.0, 20240101}, x, -1, 1);
  RegimeField b = init_field(StochasticRegime{0.05, 0.0, 20240101}, x, -1, 1);
  RegimeField c = init_field(StochasticRegime{0.05, 0.0, 20240102}, x, -1, 1);
  for (int s = 0; s < 50; ++s) {
    a.advance();
    b.advance();
    c.advance();
  }
  EXPECT_EQ(a.values(), b.values());
  EXPECT_NE(a.values(), c.values());
  EXPECT_FALSE(a.is_static());
}

TEST(Regime, UniformDoubleFromTop53Bits) {
  std::mt19937_64 a(99), b(99);
  for (int i = 0; i < 1000; ++i) {
    const double u = uniform01(a);
    EXPECT_EQ(u, static_cast<double>(b() >> 11) / 9007199254740992.0);
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
  }
  // First draw of the reference generator with the default seed.
  std::mt19937_64 ref;
  EXPECT_EQ(ref(), 14514284786278117030ull);
}

TEST(RegimeProperty, ValuesStayInUnitInterval) {
  std::mt19937_64 seeds(5);
  for (int trial = 0; trial < 20; ++trial) {
    const double eps = std::ldexp(1.0, -trial % 8);
    RegimeField f = init_field(StochasticRegime{eps, (trial % 3) * 0.5, seeds()},
                               positions(0, 1, 200), 0, 1);
    for (int s = 0; s < 200; ++s) {
      f.advance();
      for (double r : f.values()) ASSERT_TRUE(r >= 0.0 && r <= 1.0);
    }
  }
  RegimeField u = init_field(UniformRandomRegime{11}, positions(0, 1, 200), 0, 1);
  for (int s = 0; s < 50; ++s) {
    u.advance();
    for (double r : u.values()) ASSERT_TRUE(r >= 0.0 && r < 1.0);
  }
}

TEST(RegimeProperty, SmallEpsilonStaysNearInitialValue) {
  // After n steps every value moved by at most n epsilon.
  for (double eps : {1e-2, 1e-3, 1e-4}) {
    RegimeField f = init_field(StochasticRegime{eps, 0.5, 1}, positions(0, 1, 100), 0, 1);
    for (int s = 0; s < 40; ++s) f.advance();
    for (double r : f.values()) EXPECT_LE(std::abs(r - 0.5), 40 * eps * (1 + 1e-12));
  }
}

TEST(Regime, Description) {
  EXPECT_EQ(describe(ConstantRegime{0.25}), "constant:0.25");
  EXPECT_EQ(describe(PiecewiseRegime{{0.5}, {0.0, 1.0}}), "piecewise:0|0.5|1");
  EXPECT_EQ(describe(UniformRandomRegime{3}), "uniform_random");
}
