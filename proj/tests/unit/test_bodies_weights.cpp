#include "fixtures.hpp"
#include "ulamfloat/weight.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace ulamfloat;
using namespace fixtures;

TEST(Body, BallQueries) {
  const Body b = Body::ball(v3(1, 0, 0), 2.0);
  EXPECT_EQ(b.kind(), BodyKind::Ball);
  EXPECT_NEAR(b.volume(), 4.0 / 3.0 * kPi * 8.0, 1e-12);
  EXPECT_NEAR(b.support(v3(1, 0, 0)), 3.0, 1e-14);
  EXPECT_NEAR(b.diameter(), 4.0, 1e-14);
  EXPECT_TRUE(b.contains(v3(2.9, 0, 0)));
  EXPECT_FALSE(b.contains(v3(3.1, 0, 0)));
  EXPECT_THROW(Body::ball(v2(0, 0), -1.0), InvalidInput);
}

TEST(Body, EllipsePerimeterFromBoundaryQuadrature) {
  double perimeter = 0.0;
  for (const auto& s : ellipse12().boundary_quadrature(256).samples) {
    perimeter += s.weight;
  }
  EXPECT_NEAR(perimeter, 9.688448220547676, 1e-12);
}

TEST(Body, EllipsoidValidation) {
  Mat bad(2, 2);
  bad << 1.0, 0.5, 0.4, 1.0;
  EXPECT_THROW(Body::ellipsoid(Vec::Zero(2), bad), InvalidInput);
  Mat indefinite(2, 2);
  indefinite << 1.0, 0.0, 0.0, -1.0;
  EXPECT_THROW(Body::ellipsoid(Vec::Zero(2), indefinite), InvalidInput);
}

TEST(Body, PolytopeRemovesRedundantPointsAndRejectsDegenerateInput) {
  const Body sq = Body::polytope({v2(0, 0), v2(1, 0), v2(1, 1), v2(0, 1), v2(0.5, 0.5)});
  EXPECT_EQ(sq.vertices().size(), 4u);
  EXPECT_NEAR(sq.volume(), 1.0, 1e-14);
  EXPECT_NEAR((sq.barycenter() - v2(0.5, 0.5)).norm(), 0.0, 1e-14);
  EXPECT_THROW(Body::polytope({v2(0, 0), v2(1, 1), v2(2, 2)}), InvalidInput);
  EXPECT_THROW(Body::polytope({v3(0, 0, 0), v3(1, 0, 0), v3(0, 1, 0), v3(1, 1, 0)}),
               InvalidInput);
}

TEST(Body, TetrahedronBarycenterAndVolume) {
  const Body t = tetrahedron();
  EXPECT_NEAR(t.volume(), 8.0 / 3.0, 1e-13);
  EXPECT_NEAR(t.barycenter().norm(), 0.0, 1e-14);
  EXPECT_EQ(t.facets().size(), 4u);
}

TEST(Body, LinearMapsAndNormalization) {
  Mat t(2, 2);
  t << 2.0, 1.0, 0.0, 1.0;
  const Body e = disc().apply_linear(t);
  EXPECT_EQ(e.kind(), BodyKind::Ellipsoid);
  EXPECT_NEAR(e.volume(), 2.0 * kPi, 1e-12);
  const Body rot = disc().apply_linear(3.0 * Mat::Identity(2, 2));
  EXPECT_EQ(rot.kind(), BodyKind::Ball);
  const Body n = triangle().normalized();
  EXPECT_NEAR(n.volume(), 1.0, 1e-13);
  EXPECT_NEAR(n.barycenter().norm(), 0.0, 1e-14);
  EXPECT_THROW(disc().apply_linear(Mat::Zero(2, 2)), InvalidInput);
}

TEST(Body, RadialFunctionAndCurvature) {
  const Body sq = centered_square();
  EXPECT_NEAR(sq.radial(v2(1, 0)), 0.5, 1e-14);
  EXPECT_NEAR(sq.radial(v2(1, 1).normalized()), std::sqrt(0.5), 1e-14);
  const auto k_face = sq.gaussian_curvature(v2(0.5, 0.1));
  ASSERT_TRUE(k_face.has_value());
  EXPECT_EQ(*k_face, 0.0);
  EXPECT_FALSE(sq.gaussian_curvature(v2(0.5, 0.5)).has_value());
  const Body ball = Body::ball(Vec::Zero(3), 2.0);
  EXPECT_NEAR(*ball.gaussian_curvature(v3(0, 0, 2)), 0.25, 1e-14);
  EXPECT_THROW(unit_square().radial(v2(1, 0)), InvalidInput);
}

TEST(Body, InteriorPointIsChebyshevCenter) {
  const Body b = Body::polytope({v2(0, 0), v2(4, 0), v2(0, 3)});
  EXPECT_NEAR(b.inradius(), 1.0, 1e-12);
  EXPECT_NEAR((b.interior_point() - v2(1, 1)).norm(), 0.0, 1e-12);
  EXPECT_TRUE(b.recentered().origin_interior());
}

TEST(Weight, ConstantAndGaussian) {
  const Weight c = Weight::constant(2.5);
  EXPECT_EQ(c(v2(3, 4)), 2.5);
  EXPECT_TRUE(c.constant_value().has_value());
  EXPECT_THROW(Weight::constant(0.0), InvalidInput);
  const Weight g = Weight::gaussian(v2(1, 0), 0.5, 2.0);
  EXPECT_NEAR(g(v2(1.5, 0)), 2.0 * std::exp(-0.5), 1e-15);
  EXPECT_TRUE(g.is_log_concave());
  EXPECT_THROW(Weight::gaussian(v2(0, 0), -1.0), InvalidInput);
}

TEST(Weight, PushForwardComposesWithInverse) {
  const Weight g = Weight::gaussian(v2(0, 0), 1.0);
  Mat t(2, 2);
  t << 2.0, 0.0, 0.0, 1.0;
  const Weight h = g.pushed_forward(t, v2(1, 1));
  EXPECT_NEAR(h(v2(3, 2)), g(v2(1, 1)), 1e-15);
}

TEST(Weight, PhiPExponentsAndBallValues) {
  const auto [a, b] = phi_p_exponents(2, 2.0);
  EXPECT_NEAR(a, 2.0 * 3.0 * 1.0 / (2.0 * 4.0), 1e-15);
  EXPECT_NEAR(b, 2.0 / 8.0, 1e-15);
  const auto [ai, bi] = phi_p_exponents(3, INFINITY);
  EXPECT_NEAR(ai, 6.0, 1e-15);
  EXPECT_NEAR(bi, 1.5, 1e-15);
  EXPECT_THROW(phi_p_exponents(2, -2.0), InvalidInput);
  // On a centered ball of radius rho, phi_p = rho^{n^2 (p-1)/(n+p)}.
  const double rho = 1.7;
  const Body ball = Body::ball(Vec::Zero(2), rho);
  const Weight w = Weight::phi_p(3.0, ball);
  EXPECT_NEAR(w(v2(0.3, -0.2)), std::pow(rho, 4.0 * 2.0 / 5.0), 1e-12);
  EXPECT_THROW(w(v2(5, 0)), InvalidInput);
  EXPECT_THROW(Weight::phi_p(2.0, centered_square()), InvalidInput);
}

TEST(Weight, PhiOneIsConstant) {
  const Body e = ellipse12();
  const Weight w = Weight::phi_p(1.0, e);
  ASSERT_TRUE(w.constant_value().has_value());
  EXPECT_EQ(*w.constant_value(), 1.0);
}

TEST(Weight, CollarExtensionMatchesBoundaryValue) {
  const Body e = ellipse12();
  const Weight w = Weight::phi_p(2.0, e, PhiExtension::Collar, 0.2);
  const Weight r = Weight::phi_p(2.0, e, PhiExtension::Radial);
  for (const auto& s : e.boundary_quadrature(16).samples) {
    EXPECT_NEAR(w(s.x), r(s.x), 1e-10);
    EXPECT_NEAR(r(s.x), phi_p_boundary_value(2, 2.0, s.support_number, s.curvature), 1e-10);
  }
  EXPECT_NEAR(w(Vec::Zero(2)), 1.0, 1e-15);
}
