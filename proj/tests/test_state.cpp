#include <gtest/gtest.h>

#include "dem/errors.hpp"
#include "dem/state.hpp"
#include "generators.hpp"

using namespace dem;
using dem::testing::Gen;
using dem::testing::kAirWater;
using dem::testing::kGas;
using dem::testing::kLiquid;
using dem::testing::rel_diff;

TEST(State, PrimToConsByHand) {
  const Conserved c = prim_to_cons({1.0, 0.0, 1.0}, kGas);
  EXPECT_DOUBLE_EQ(c.mass, 1.0);
  EXPECT_DOUBLE_EQ(c.momentum, 0.0);
  EXPECT_DOUBLE_EQ(c.energy, 2.5);
  const Primitive v = cons_to_prim({1.0, 0.0, 2.5}, kGas);
  EXPECT_DOUBLE_EQ(v.rho, 1.0);
  EXPECT_DOUBLE_EQ(v.u, 0.0);
  EXPECT_DOUBLE_EQ(v.p, 1.0);
}

TEST(State, ZeroMomentumMeansZeroVelocity) {
  EXPECT_EQ(prim_to_cons({3.0, 0.0, 7e5}, kGas).momentum, 0.0);
  EXPECT_EQ(cons_to_prim({3.0, 0.0, 4e6}, kGas).u, 0.0);
}

TEST(State, ConsToPrimRejectsNegativeInternalEnergy) {
  EXPECT_THROW(cons_to_prim({1.0, 10.0, 1.0}, kGas), InvalidStateError);
  EXPECT_THROW(cons_to_prim({0.0, 0.0, 1.0}, kGas), InvalidStateError);
  EXPECT_THROW(prim_to_cons({1.0, 0.0, -1.0}, kGas), InvalidStateError);
}

TEST(State, PhysicalFluxByHand) {
  const Flux f = physical_flux({2.0, 3.0, 5.0}, kGas);
  const double E = 2.0 * (0.5 * 9.0 + 5.0 / (0.4 * 2.0));
  EXPECT_DOUBLE_EQ(f.mass, 6.0);
  EXPECT_DOUBLE_EQ(f.momentum, 18.0 + 5.0);
  EXPECT_DOUBLE_EQ(f.energy, 3.0 * (E + 5.0));
}

TEST(State, MixtureOfIdenticalPhases) {
  const Primitive v{900.0, 3.0, 2e5};
  const EosPair same{kLiquid, kLiquid};
  for (double a : {0.1, 0.5, 0.93}) {
    const MixtureQuantities m = mixture_quantities(make_cell(a, v, 1.0 - a, v, same), kLiquid,
                                                   kLiquid);
    EXPECT_NEAR(m.rho, v.rho, 1e-12 * v.rho);
    EXPECT_NEAR(m.u, v.u, 1e-12);
    EXPECT_NEAR(m.p, v.p, 1e-9 * v.p);
  }
}

TEST(State, MixtureByHand) {
  const MixtureCell c = make_cell(0.5, {50.0, 0.0, 1e5}, 0.5, {1000.0, 0.0, 1e5}, kAirWater);
  EXPECT_DOUBLE_EQ(mixture_quantities(c, kGas, kLiquid).rho, 525.0);
  // Equal phase masses, u1 = 0 and u2 = 10 give the midpoint velocity.
  const MixtureCell d = make_cell(0.5, {100.0, 0.0, 1e5}, 0.5, {100.0, 10.0, 1e5}, kAirWater);
  EXPECT_DOUBLE_EQ(mixture_quantities(d, kGas, kLiquid).u, 5.0);
}

TEST(State, CellValidation) {
  const Primitive g{1.0, 0.0, 1e5};
  const Primitive l{1000.0, 0.0, 1e5};
  EXPECT_THROW(make_cell(0.0, g, 1.0, l, kAirWater), InvalidStateError);
  EXPECT_THROW(make_cell(1.0, g, 0.0, l, kAirWater), InvalidStateError);
  EXPECT_THROW(make_cell(0.5, g, 0.6, l, kAirWater), InvalidStateError);
  EXPECT_THROW(make_cell(0.5, {-1.0, 0.0, 1e5}, 0.5, l, kAirWater), InvalidStateError);
  EXPECT_NO_THROW(make_cell(1e-6, g, 1.0 - 1e-6, l, kAirWater));
  try {
    make_cell(0.5, g, 0.5, {1000.0, 0.0, -7e8}, kAirWater);
    FAIL() << "expected InvalidStateError";
  } catch (const InvalidStateError& e) {
    EXPECT_NE(std::string(e.what()).find("phase 2"), std::string::npos) << e.what();
  }
}

TEST(StateProperty, PrimConsRoundTrip) {
  Gen gen(21);
  for (int n = 0; n < 100000; ++n) {
    const EosParams e = gen.eos();
    const Primitive v = gen.primitive(e);
    const Primitive w = cons_to_prim(prim_to_cons(v, e), e);
    const double pscale = std::abs(v.p) + e.gamma * e.pi_inf;
    const double a = sound_speed(e, v.rho, v.p);
    ASSERT_LT(rel_diff(w.rho, v.rho), 1e-12) << "n=" << n;
    ASSERT_LE(std::abs(w.u - v.u), 1e-12 * (std::abs(v.u) + a)) << "n=" << n;
    // Kinetic energy is subtracted back out, so the error scales with rho (e + u^2/2).
    const double escale = pscale + 0.5 * (e.gamma - 1.0) * v.rho * v.u * v.u;
    ASSERT_LE(std::abs(w.p - v.p), 1e-12 * escale) << "n=" << n;
  }
}

TEST(StateProperty, MixtureLinearInFractions) {
  // rho_mix and p_mix are affine in alpha1 at fixed phase primitives.
  Gen gen(22);
  for (int n = 0; n < 2000; ++n) {
    const Primitive v1 = gen.primitive(kGas);
    const Primitive v2 = gen.primitive(kLiquid);
    const double a = gen.uniform(0.01, 0.49);
    const double b = gen.uniform(0.51, 0.99);
    const double t = gen.uniform(0.0, 1.0);
    const double c = t * a + (1.0 - t) * b;
    auto mix = [&](double a1) {
      return mixture_quantities(make_cell(a1, v1, 1.0 - a1, v2, kAirWater), kGas, kLiquid);
    };
    const MixtureQuantities ma = mix(a), mb = mix(b), mc = mix(c);
    const double pscale = std::abs(v1.p) + std::abs(v2.p) + kLiquid.pi_inf;
    ASSERT_LT(rel_diff(mc.rho, t * ma.rho + (1.0 - t) * mb.rho), 1e-12);
    ASSERT_LE(std::abs(mc.p - (t * ma.p + (1.0 - t) * mb.p)), 1e-12 * pscale);
  }
}
