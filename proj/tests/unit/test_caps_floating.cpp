#include "fixtures.hpp"
#include "ulamfloat/asa.hpp"
#include "ulamfloat/float_bodies.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace ulamfloat;
using namespace fixtures;

namespace {

const Weight kOne = Weight::constant(1.0);

}  // namespace

TEST(Caps, DiscSegmentOracles) {
  const Direction e2 = Direction::axis(2, 1);
  EXPECT_NEAR(cap_mass(disc(), kOne, e2, 0.857), 0.09975065072284447, 1e-14);
  const double d = cut_height(disc(), kOne, e2, 0.1);
  EXPECT_NEAR(d, 0.8567581563109013, 1e-13);
  EXPECT_NEAR(cap_first_moment(disc(), kOne, e2, d), 0.09144218708788998, 1e-13);
  EXPECT_NEAR(cap_barycenter(disc(), kOne, e2, d)[1], 0.9144218708788998, 1e-12);
}

TEST(Caps, SquareCutExample) {
  const CapCut cut = cap_cut(unit_square(), kOne, Direction::axis(2, 0), 0.1);
  EXPECT_NEAR(cut.d, 0.9, 1e-12);
  EXPECT_NEAR((cut.barycenter - v2(0.95, 0.5)).norm(), 0.0, 1e-12);
  EXPECT_EQ(cut.backend, CapBackend::ExactClip);
}

TEST(Caps, GaussianMassOnDisc) {
  const Weight g = Weight::gaussian(Vec::Zero(2), 1.0);
  const auto total = total_mass(g, disc());
  EXPECT_NEAR(total.value, 2.472240777719227, 1e-10);
  EXPECT_EQ(resolve_backend(disc(), g, {}), CapBackend::SliceQuadrature);
}

TEST(Caps, BackendsAgree) {
  const Weight g = Weight::gaussian(v2(0.2, -0.1), 0.7);
  const Direction th(v2(0.6, 0.8));
  const Body e = ellipse12();
  CapOptions mc;
  mc.backend = CapBackend::MonteCarlo;
  mc.mc_samples = 200000;
  const auto exact = cap_moments(e, g, th, 0.4);
  const auto sampled = cap_moments(e, g, th, 0.4, mc);
  EXPECT_NEAR(sampled.mass, exact.mass, 5.0 * sampled.error + 1e-3);
  // Polytope with a smooth weight: cubature against the constant-weight clip for phi = 1.
  CapOptions cub;
  cub.backend = CapBackend::ClipCubature;
  const auto a = cap_moments(triangle(), kOne, th, 0.3, cub);
  const auto b = cap_moments(triangle(), kOne, th, 0.3);
  EXPECT_NEAR(a.mass, b.mass, 1e-14);
  EXPECT_NEAR((a.first - b.first).norm(), 0.0, 1e-14);
  // Ellipsoid with constant weight: slices against the closed form.
  CapOptions slices;
  slices.backend = CapBackend::SliceQuadrature;
  slices.detect_constant = false;
  EXPECT_NEAR(cap_mass(e, kOne, th, 0.4, slices), cap_mass(e, kOne, th, 0.4), 1e-11);
}

TEST(Caps, MonteCarloIsReproducible) {
  CapOptions mc;
  mc.backend = CapBackend::MonteCarlo;
  mc.mc_samples = 20000;
  mc.seed = 42;
  const Direction th = Direction::axis(2, 0);
  EXPECT_EQ(cap_mass(disc(), kOne, th, 0.2, mc), cap_mass(disc(), kOne, th, 0.2, mc));
}

TEST(Caps, CutHeightEdgeCasesAndErrors) {
  const Direction th = Direction::axis(3, 2);
  EXPECT_NEAR(cut_height(cube(), kOne, th, 0.0), 0.5, 1e-15);
  EXPECT_NEAR(cut_height(cube(), kOne, th, 1.0), -0.5, 1e-12);
  EXPECT_THROW(cut_height(cube(), kOne, th, 1.5), InvalidInput);
  EXPECT_THROW(cap_mass(cube(), kOne, th, 2.0), InvalidInput);
  EXPECT_THROW(cut_height(cube(), kOne, Direction::axis(2, 0), 0.1), InvalidInput);
}

TEST(Caps, UnitCapVolumes) {
  EXPECT_NEAR(unit_cap_volume(3, 0.0), 2.0 * kPi / 3.0, 1e-14);
  EXPECT_NEAR(unit_cap_volume(3, 0.5), kPi * 0.25 * 2.5 / 3.0, 1e-14);
  EXPECT_NEAR(unit_cap_volume(2, -1.0), kPi, 1e-14);
}

TEST(UlamBody, DiscSupportIsRadiusMinusShrinkage) {
  const auto s = ulam_support(disc(), kOne, Direction::planar(0.7), 0.1);
  EXPECT_NEAR(s.h, 1.0 - 0.0855781291211002, 1e-13);
  EXPECT_NEAR(s.x.norm(), s.h, 1e-13);
}

TEST(UlamBody, TwoSidedApproximation) {
  const auto a = build_ulam_body(triangle(), kOne, 0.02, 256);
  ASSERT_TRUE(a.has_cells);
  ASSERT_TRUE(a.gap_estimate.has_value());
  EXPECT_LE(a.inner_volume, a.outer_volume);
  const auto fine = build_ulam_body(triangle(), kOne, 0.02, 1024);
  ASSERT_TRUE(fine.gap_estimate.has_value());
  EXPECT_LT(*fine.gap_estimate, *a.gap_estimate / 8.0);
  EXPECT_LE(a.inner_volume, fine.outer_volume);
  EXPECT_LE(fine.inner_volume, a.outer_volume);
  EXPECT_EQ(strict_convexity_violations(a, 1e-12), 0);
  EXPECT_THROW(build_ulam_body(triangle(), kOne, 0.02, 5), InvalidInput);
}

TEST(UlamBody, ThreeDimensionalApproximation) {
  const auto a = build_ulam_body(cube(), kOne, 0.05, 128);
  ASSERT_TRUE(a.has_cells);
  EXPECT_LE(a.inner_volume, a.outer_volume);
  EXPECT_GT(a.inner_volume, 0.5);
}

TEST(FloatingBody, DiscFloatingBodyIsConcentricDisc) {
  const auto f = build_floating_body(disc(), kOne, 0.1, 128);
  EXPECT_EQ(f.kind, ApproxKind::ConvexFloating);
  EXPECT_FALSE(f.empty);
  EXPECT_FALSE(f.gap_estimate.has_value());
  for (double h : f.support_values) {
    EXPECT_NEAR(h, 0.8567581563109013, 1e-12);
  }
}

TEST(FloatingBody, EmptyForLargeDeltaWithWitness) {
  const auto f = build_floating_body(centered_square(), kOne, 0.6, 64);
  EXPECT_TRUE(f.empty);
  EXPECT_FALSE(f.empty_witness.empty());
  EXPECT_FALSE(f.diagnostic.empty());
}

TEST(VolumeDifference, BracketsContainExactValues) {
  const auto approx = build_ulam_body(disc(), kOne, 0.1, 512);
  const auto vd = volume_difference(disc(), approx, 256);
  const double d = ball_shrinkage(2, 1.0, 0.1);
  const double exact = kPi - kPi * (1.0 - d) * (1.0 - d);
  EXPECT_LE(vd.lo, exact);
  EXPECT_GE(vd.hi, exact);
  const Body big = Body::ball(Vec::Zero(2), 2.0);
  EXPECT_THROW(volume_difference(
                   disc(), [&](const Vec& u) { return RadialBracket{2.0, 2.0}; }, 64),
               InvalidInput);
  (void)big;
}

TEST(VolumeDifference, RefinedPlanarOracleTightensBrackets) {
  const auto approx = build_ulam_body(disc(), kOne, 0.01, 64);
  const UlamRadialOracle2D oracle(disc(), kOne, 0.01, approx);
  const auto coarse = radial_boundary(approx, v2(0.3, 0.4));
  const auto fine = oracle.query(v2(0.3, 0.4), 1e-12);
  EXPECT_LT(fine.hi - fine.lo, coarse.hi - coarse.lo);
  const double exact = 1.0 - ball_shrinkage(2, 1.0, 0.01);
  EXPECT_LE(fine.lo, exact + 1e-14);
  EXPECT_GE(fine.hi, exact - 1e-14);
}
