#include <gtest/gtest.h>

#include <cmath>

#include "dem/eos.hpp"
#include "dem/errors.hpp"
#include "generators.hpp"

using namespace dem;
using dem::testing::Gen;
using dem::testing::kGas;
using dem::testing::kLiquid;
using dem::testing::rel_diff;

TEST(Eos, IdealGasEnergyByHand) {
  EXPECT_DOUBLE_EQ(internal_energy(kGas, 1.0, 1.0), 2.5);
  EXPECT_DOUBLE_EQ(pressure_from_energy(kGas, 1.0, 2.5), 1.0);
}

TEST(Eos, LiquidEnergyByHand) {
  // (1e5 + 4.4 * 6e8) / (3.4 * 1000), roughly 7.765e5 J/kg.
  const double expected = 2640100000.0 / 3400.0;
  EXPECT_NEAR(internal_energy(kLiquid, 1000.0, 1e5), expected, 1e-9 * expected);
  EXPECT_NEAR(internal_energy(kLiquid, 1000.0, 1e5), 776500.0, 50.0);
}

TEST(Eos, SoundSpeedByHand) {
  EXPECT_NEAR(sound_speed(kLiquid, 1000.0, 1e5), std::sqrt(4.4 * 6.001e8 / 1000.0), 1e-9);
  EXPECT_NEAR(sound_speed(kLiquid, 1000.0, 1e5), 1624.94, 0.01);
  EXPECT_NEAR(sound_speed(kGas, 50.0, 1e9), 5291.50, 0.01);
}

TEST(Eos, PartialsByHand) {
  EXPECT_DOUBLE_EQ(de_dp(kGas, 1.0), 2.5);
  EXPECT_DOUBLE_EQ(de_drho(kGas, 1.0, 1.0), -2.5);
}

TEST(Eos, RejectsInadmissibleInput) {
  EXPECT_THROW(internal_energy(kGas, 0.0, 1.0), InvalidStateError);
  EXPECT_THROW(internal_energy(kGas, -1.0, 1.0), InvalidStateError);
  EXPECT_THROW(internal_energy(kLiquid, 1000.0, -4.4 * 6e8), InvalidStateError);
  EXPECT_THROW(make_eos(1.0, 0.0), InvalidStateError);
  EXPECT_THROW(make_eos(1.4, -1.0), InvalidStateError);
  EXPECT_FALSE(is_admissible(kLiquid, 1000.0, -6e8));
  EXPECT_TRUE(is_admissible(kLiquid, 1000.0, -5.9e8));
}

TEST(Eos, EnergyAtAdmissibilityBoundaryGivesBoundaryPressure) {
  // e = 0 maps to p = -gamma pi; the caller has to validate.
  EXPECT_DOUBLE_EQ(pressure_from_energy(kLiquid, 1000.0, 0.0), -4.4 * 6e8);
}

TEST(EosProperty, EnergyPressureRoundTrip) {
  Gen gen(11);
  for (int n = 0; n < 100000; ++n) {
    const EosParams e = gen.eos();
    const Primitive v = gen.primitive(e);
    const double back = pressure_from_energy(e, v.rho, internal_energy(e, v.rho, v.p));
    // Relative to the pressure scale p + gamma pi, which the inversion works in.
    ASSERT_LE(std::abs(back - v.p), 1e-14 * (std::abs(v.p) + e.gamma * e.pi_inf))
        << "n=" << n;
  }
}

TEST(EosProperty, SoundSpeedSquaredIdentity) {
  Gen gen(12);
  for (int n = 0; n < 10000; ++n) {
    const EosParams e = gen.eos();
    const Primitive v = gen.primitive(e);
    const double a = sound_speed(e, v.rho, v.p);
    ASSERT_LT(rel_diff(a * a * v.rho, e.gamma * (v.p + e.pi_inf)), 1e-14);
  }
}

TEST(EosProperty, SoundSpeedFromEnergyPartials) {
  // a^2 = (p / rho^2 - de/drho) / (de/dp)
  Gen gen(13);
  for (int n = 0; n < 10000; ++n) {
    const EosParams e = gen.eos();
    const Primitive v = gen.primitive(e);
    const double a2 =
        (v.p / (v.rho * v.rho) - de_drho(e, v.rho, v.p)) / de_dp(e, v.rho);
    const double a = sound_speed(e, v.rho, v.p);
    ASSERT_LT(rel_diff(a * a, a2), 1e-12) << "n=" << n;
  }
}

TEST(EosProperty, PartialsMatchFiniteDifferences) {
  Gen gen(14);
  for (int n = 0; n < 10000; ++n) {
    const EosParams e = gen.eos();
    const Primitive v = gen.primitive(e);
    const double hr = 1e-6 * v.rho;
    const double fd_rho = (internal_energy(e, v.rho + hr, v.p) -
                           internal_energy(e, v.rho - hr, v.p)) / (2.0 * hr);
    const double hp = 1e-6 * (std::abs(v.p) + e.pi_inf);
    const double fd_p = (internal_energy(e, v.rho, v.p + hp) -
                         internal_energy(e, v.rho, v.p - hp)) / (2.0 * hp);
    ASSERT_LT(rel_diff(de_drho(e, v.rho, v.p), fd_rho), 1e-6) << "n=" << n;
    ASSERT_LT(rel_diff(de_dp(e, v.rho), fd_p), 1e-6) << "n=" << n;
  }
}
