#include "fixtures.hpp"
#include "ulamfloat/caps.hpp"
#include "ulamfloat/cap_calculus.hpp"
#include "ulamfloat/floatsim.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace ulamfloat;
using namespace fixtures;

TEST(CapCalculus, DiscClosedForms) {
  // For a = s e2 the cap of the unit disc is {x2 >= 1/s}.
  const Vec a = v2(0.0, 2.0);
  const double h = 0.5;
  const double area = std::acos(h) - h * std::sqrt(1.0 - h * h);
  EXPECT_NEAR(cap_delta(disc(), a), area, 1e-13);
  const double half_chord = std::sqrt(1.0 - h * h);
  // grad delta = |a|^{-1} int_section x dH.
  const Vec g = grad_delta(disc(), a);
  EXPECT_NEAR(g[0], 0.0, 1e-13);
  EXPECT_NEAR(g[1], 2.0 * half_chord * h / 2.0, 1e-13);
  EXPECT_NEAR(cap_U(disc(), a)[1], 2.0 * std::pow(half_chord, 3) / 3.0, 1e-13);
  EXPECT_FALSE(hyperplane_meets_interior(disc(), v2(0.0, 0.5)));
  EXPECT_TRUE(hyperplane_meets_interior(disc(), a));
}

TEST(CapCalculus, JacobianTraceMatchesSectionNorm) {
  const Vec a = v3(0.4, -0.7, 1.3);
  for (const Body& b : {cube(), tetrahedron(), Body::ball(v3(0.1, 0, 0), 1.0)}) {
    const Mat j = jac_U(b, a);
    EXPECT_NEAR(j.trace(), section_norm2_quadrature(b, a) / a.norm(), 1e-10);
  }
}

TEST(CapCalculus, FiniteDifferencesAgree) {
  for (const Body& b : {triangle(), ellipse12(), cube()}) {
    const auto summary = grad_check(b, 10, 7);
    EXPECT_TRUE(summary.passed()) << summary.max_grad_deviation << " "
                                  << summary.max_jac_deviation;
    EXPECT_EQ(summary.samples, 10);
  }
}

TEST(CapCalculus, RandomVectorsAreInteriorAndReproducible) {
  const auto a = random_cap_vectors(cube(), 16, 3);
  const auto b = random_cap_vectors(cube(), 16, 3);
  ASSERT_EQ(a.size(), 16u);
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i], b[i]);
    EXPECT_TRUE(hyperplane_meets_interior(cube(), a[i]));
  }
}

TEST(CapCalculus, BarycenterThroughU) {
  const Direction th = Direction::planar(0.4);
  const Body t = triangle().recentered();
  const Vec via_u = barycenter_via_U(t, th, 0.05);
  const Vec direct = cap_cut(t, Weight::constant(1.0), th, 0.05).barycenter;
  EXPECT_NEAR((via_u - direct).norm(), 0.0, 1e-10);
}

TEST(Flotation, DiscFloatsInEveryPosition) {
  const auto r = equilibrium_directions(disc(), 0.3, 90);
  EXPECT_TRUE(r.every_position);
  EXPECT_LT(r.max_abs_torque, 1e-12);
}

TEST(Flotation, SquareHasFinitelyManyEquilibria) {
  const auto r = equilibrium_directions(centered_square(), 0.5, 360);
  EXPECT_FALSE(r.every_position);
  ASSERT_FALSE(r.angles.empty());
  EXPECT_EQ(r.angles.size() % 4, 0u);
  for (double angle : r.angles) {
    EXPECT_LT(std::abs(float_torque(centered_square(), 0.5, angle)), 1e-10);
    EXPECT_LT(collinearity_deviation(centered_square(), 0.5, angle), 1e-8);
  }
}

TEST(Flotation, StateAndValidation) {
  const auto s = float_state(centered_square(), 0.25, v2(0, 1));
  EXPECT_NEAR(s.waterline, -0.25, 1e-12);
  EXPECT_NEAR(s.submerged, 0.25, 1e-12);
  EXPECT_NEAR(s.buoyancy[1], -0.375, 1e-12);
  EXPECT_THROW(float_state(centered_square(), 1.5, v2(0, 1)), InvalidInput);
  EXPECT_THROW(float_state(unit_square(), 0.5, v2(0, 1)), InvalidInput);
  EXPECT_THROW(float_state(cube(), 0.5, v3(0, 0, 1)), InvalidInput);
}

TEST(Flotation, RoundnessOfDiscUlamBody) {
  const auto approx = build_ulam_body(disc(), Weight::constant(1.0), 0.1, 256);
  const auto r = roundness(approx);
  EXPECT_NEAR(r.radius, 1.0 - 0.0855781291211002, 1e-3);
  EXPECT_GT(r.score, 0.999);
}
