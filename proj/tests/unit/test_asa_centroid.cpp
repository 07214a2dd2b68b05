#include "fixtures.hpp"
#include "ulamfloat/asa.hpp"
#include "ulamfloat/centroid.hpp"
#include "ulamfloat/checks.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <limits>

using namespace ulamfloat;
using namespace fixtures;

TEST(Constants, BothExpressions) {
  EXPECT_NEAR(c_n_proposition(2), 0.3931112091313345, 1e-15);
  EXPECT_NEAR(c_n_proposition(3), 0.3761263890318375, 1e-15);
  EXPECT_NEAR(c_n_theorem(2), 0.9157713940426655, 1e-15);
  EXPECT_NEAR(c_n_theorem(2) / c_n_proposition(2), 2.3295479059634637, 1e-13);
}

TEST(BallShrinkage, FrozenOracleValues) {
  EXPECT_NEAR(ball_shrinkage(2, 1.0, 1e-6) / 3.931130488801178e-5, 1.0, 1e-10);
  EXPECT_NEAR(ball_shrinkage(2, 1.0, 1e-8) / 1.824660995027827e-6, 1.0, 1e-10);
  EXPECT_NEAR(ball_shrinkage(2, 1.0, kPi / 2.0), 0.5755868184216124, 1e-13);
  EXPECT_NEAR(ball_shrinkage(2, 1.0, 0.1), 0.0855781291211002, 1e-14);
  EXPECT_NEAR(ball_shrinkage(2, 2.0, 0.1), 0.06749379461602525, 1e-14);
}

TEST(BallShrinkage, ScalingAndWeight) {
  // Delta(rho, delta, s) = rho Delta(1, delta / (s rho^n)).
  EXPECT_NEAR(ball_shrinkage(3, 2.0, 0.4, 0.5), 2.0 * ball_shrinkage(3, 1.0, 0.1), 1e-13);
  EXPECT_THROW(ball_shrinkage(2, 1.0, 4.0), InvalidInput);
  EXPECT_THROW(ball_shrinkage(2, -1.0, 0.1), InvalidInput);
}

TEST(BallShrinkage, ThreeDimensionalLimit) {
  const auto r = resolve_constant(3);
  EXPECT_EQ(r.matched, "proposition");
  EXPECT_NEAR(r.limit / c_n_proposition(3), 1.0, 1e-4);
}

TEST(AffineSurfaceArea, BallClosedForms) {
  const Body b = Body::ball(Vec::Zero(3), 1.5);
  for (double p : {1.0, 2.0, 0.5, std::numeric_limits<double>::infinity()}) {
    EXPECT_NEAR(asa_p(b, p) / asa_p_ball(3, 1.5, p), 1.0, 1e-8) << p;
  }
  EXPECT_THROW(asa_p(b, -3.0), InvalidInput);
  EXPECT_THROW(asa_p(centered_square(), 1.0), InvalidInput);
}

TEST(AffineSurfaceArea, EllipseAffinePerimeter) {
  // as_1 of an ellipse with semi-axes a, b is 2 pi (a b)^{1/3}; as_2 is invariant under
  // volume-preserving maps and equals that of the disc of equal area.
  EXPECT_NEAR(asa_p(ellipse12(), 1.0), 2.0 * kPi * std::cbrt(2.0), 1e-8);
  EXPECT_NEAR(asa_p(ellipse12(), 2.0), asa_p_ball(2, std::sqrt(2.0), 2.0), 1e-8);
}

TEST(LimitReference, DiscAndEllipse) {
  EXPECT_NEAR(limit_reference(disc(), Weight::constant(1.0)), c_n_proposition(2) * 2.0 * kPi,
              1e-9);
  EXPECT_EQ(limit_reference(centered_square(), Weight::constant(1.0)), 0.0);
  EXPECT_NEAR(limit_reference(ellipse12(), Weight::constant(1.0)),
              c_n_proposition(2) * asa_p(ellipse12(), 1.0), 1e-8);
}

TEST(Aitken, AcceleratesGeometricSequences) {
  const double q = 0.4;
  EXPECT_NEAR(aitken(1.0 + 1.0, 1.0 + q, 1.0 + q * q), 1.0, 1e-14);
  EXPECT_EQ(aitken(2.0, 2.0, 2.0), 2.0);
}

TEST(LimitExperiment, EllipseApproachesReference) {
  LimitOptions opts;
  opts.delta0 = 1e-3;
  opts.steps = 4;
  opts.m = 1024;
  const auto rec = limit_experiment(ellipse12(), Weight::constant(1.0), opts);
  ASSERT_EQ(rec.rows.size(), 4u);
  EXPECT_NEAR(rec.extrapolated / rec.reference, 1.0, 0.01);
  for (const auto& row : rec.rows) {
    EXPECT_LE(row.ratio_lo, row.ratio_hi);
  }
}

TEST(LimitExperiment, GaussianWeightOnDisc) {
  LimitOptions opts;
  opts.delta0 = 1e-3;
  opts.steps = 4;
  opts.m = 1024;
  const Weight g = Weight::gaussian(Vec::Zero(2), 1.0);
  const auto rec = limit_experiment(disc(), g, opts);
  // phi = e^{-1/2} on the unit circle.
  EXPECT_NEAR(rec.reference, c_n_proposition(2) * 2.0 * kPi * std::exp(1.0 / 3.0), 1e-8);
  EXPECT_NEAR(rec.extrapolated / rec.reference, 1.0, 0.01);
}

TEST(CentroidBody, CubeAndDiscClosedForms) {
  const Direction e1 = Direction::axis(3, 0);
  EXPECT_NEAR(zp_support(cube(), 1.0, e1).h, 0.25, 1e-12);
  EXPECT_NEAR(zp_support(cube(), 2.0, e1).h, 1.0 / (2.0 * std::sqrt(3.0)), 1e-12);
  const Body d = disc().normalized();
  const double r = 1.0 / std::sqrt(kPi);
  EXPECT_NEAR(zp_support(d, 1.0, Direction::planar(0.3)).h, 4.0 * r * r * r / 3.0, 1e-10);
  EXPECT_NEAR(zp_support(d, 2.0, Direction::planar(0.3)).h, std::sqrt(kPi * std::pow(r, 4) / 4.0),
              1e-10);
  EXPECT_THROW(zp_support(disc(), 1.0, Direction::planar(0.0)), InvalidInput);
  EXPECT_THROW(zp_support(cube(), 0.5, e1), InvalidInput);
}

TEST(CentroidBody, GradientIsBoundaryPoint) {
  const Body t = triangle().normalized();
  const Direction th = Direction::planar(1.1);
  const auto z = zp_support(t, 3.0, th);
  EXPECT_NEAR(z.x.dot(th.vec()), z.h, 1e-10);
  const auto approx = build_zp_body(t, 3.0, 64);
  EXPECT_TRUE(approx.has_cells);
  EXPECT_LE(approx.inner_volume, approx.outer_volume);
}

TEST(Checks, SandwichOnSmallGrid) {
  const auto r = sandwich_check(triangle(), Weight::constant(1.0), 0.02, 64);
  EXPECT_TRUE(r.passed);
  EXPECT_GE(r.left_margin, 0.0);
  EXPECT_THROW(sandwich_check(disc(), Weight::phi_p(2.0, disc()), 0.02, 64), InvalidInput);
}

TEST(Checks, SymmetryNeedsNormalizedBody) {
  EXPECT_THROW(symmetry_check(triangle(), 0.1, 64), InvalidInput);
  EXPECT_TRUE(symmetry_check(triangle().normalized(), 0.2, 64).passed);
}

TEST(Checks, ZpSandwichPreconditions) {
  EXPECT_THROW(zp_sandwich_check(triangle().normalized(), 0.1, 64), InvalidInput);
  EXPECT_THROW(zp_sandwich_check(cube(), 0.5, 64), InvalidInput);
  EXPECT_TRUE(zp_sandwich_check(centered_square(), 0.1, 64).passed);
}
