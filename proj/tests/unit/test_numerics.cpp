#include "fixtures.hpp"
#include "ulamfloat/geometry.hpp"
#include "ulamfloat/quadrature.hpp"
#include "ulamfloat/sphere.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace ulamfloat;
using namespace fixtures;

TEST(Quadrature, GaussLegendreIsExactForPolynomials) {
  const auto& rule = quad::gauss_legendre(5);
  double sum = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    sum += rule.weights[i] * std::pow(rule.nodes[i], 8);
  }
  EXPECT_NEAR(sum, 2.0 / 9.0, 1e-15);
  const auto mapped = quad::gauss_legendre(4, 1.0, 3.0);
  double s = 0.0;
  for (std::size_t i = 0; i < mapped.nodes.size(); ++i) {
    s += mapped.weights[i] * mapped.nodes[i] * mapped.nodes[i];
  }
  EXPECT_NEAR(s, 26.0 / 3.0, 1e-13);
}

TEST(Quadrature, AdaptiveHandlesEndpointSingularity) {
  double err = 0.0;
  const double v = quad::integrate_adaptive_scalar([](double x) { return std::sqrt(x); }, 0.0,
                                                   1.0, 1e-12, 0.0, &err);
  EXPECT_NEAR(v, 2.0 / 3.0, 1e-11);
  EXPECT_LT(err, 1e-10);
}

TEST(Quadrature, AdaptiveVectorIntegrand) {
  const auto r = quad::integrate_adaptive(
      [](double x) {
        Vec v(2);
        v << std::sin(x), std::cos(x);
        return v;
      },
      0.0, kPi, 1e-13);
  EXPECT_NEAR(r.value[0], 2.0, 1e-12);
  EXPECT_NEAR(r.value[1], 0.0, 1e-12);
}

TEST(Quadrature, SimplexRulesIntegrateMonomials) {
  const auto& tri = quad::simplex_rule(2, 4);
  double w = 0.0;
  double x2 = 0.0;
  for (std::size_t i = 0; i < tri.weights.size(); ++i) {
    w += tri.weights[i];
    x2 += tri.weights[i] * tri.barycentric[i][1] * tri.barycentric[i][1];
  }
  EXPECT_NEAR(w, 1.0, 1e-14);
  // Mean of lambda^2 over a triangle is 2! 2! / 4! = 1/6.
  EXPECT_NEAR(x2, 1.0 / 6.0, 1e-14);
  const auto& tet = quad::simplex_rule(3, 4);
  double x3 = 0.0;
  for (std::size_t i = 0; i < tet.weights.size(); ++i) {
    x3 += tet.weights[i] * std::pow(tet.barycentric[i][0], 3);
  }
  // Mean of lambda^3 over a tetrahedron: 3! 3! / 6! = 1/20.
  EXPECT_NEAR(x3, 1.0 / 20.0, 1e-14);
}

TEST(Sphere, DirectionGridsAreAntipodal) {
  for (int n : {2, 3, 4}) {
    const auto grid = direction_grid(n, 64);
    ASSERT_EQ(grid.size(), 64u);
    for (int i = 0; i < 32; ++i) {
      EXPECT_NEAR((grid[i].vec() + grid[i + 32].vec()).norm(), 0.0, 1e-15);
      EXPECT_NEAR(grid[i].vec().norm(), 1.0, 1e-15);
    }
  }
  EXPECT_THROW(direction_grid(2, 7), InvalidInput);
}

TEST(Sphere, QuadratureWeightsSumToArea) {
  for (int n : {2, 3, 4, 5}) {
    double sum = 0.0;
    double z2 = 0.0;
    for (const auto& node : sphere_quadrature(n, 16)) {
      sum += node.weight;
      z2 += node.weight * node.u[n - 1] * node.u[n - 1];
    }
    EXPECT_NEAR(sum / unit_sphere_area(n), 1.0, 1e-12) << n;
    EXPECT_NEAR(z2 * n / unit_sphere_area(n), 1.0, 1e-12) << n;
  }
}

TEST(Geometry, PlanarHullDropsInteriorAndCollinearPoints) {
  const auto hull = geom::hull2d({v2(0, 0), v2(1, 0), v2(0.5, 0), v2(1, 1), v2(0, 1),
                                  v2(0.5, 0.5)});
  EXPECT_EQ(hull.size(), 4u);
}

TEST(Geometry, CubeCellMomentsAndClipping) {
  const auto cell = geom::ConvexCell::box(Vec::Constant(3, -1.0), Vec::Constant(3, 1.0));
  EXPECT_NEAR(cell.volume(), 8.0, 1e-13);
  const auto half = cell.clip(v3(1, 1, 1), 0.0);
  EXPECT_NEAR(half.volume(), 4.0, 1e-12);
  const auto m = cell.clip(v3(0, 0, 1), 0.0).moments();
  EXPECT_NEAR(m.centroid()[2], -0.5, 1e-13);
  const auto sec = cell.section(v3(0, 0, 1), 0.25);
  EXPECT_NEAR(sec.m0, 4.0, 1e-13);
  EXPECT_NEAR(sec.m1[2], 1.0, 1e-13);
  EXPECT_NEAR(sec.m2(0, 0), 4.0 / 3.0, 1e-13);
}

TEST(Geometry, HalfplaneIntersectionMatchesSequentialClipping) {
  const auto grid = direction_grid(2, 40);
  std::vector<Vec> normals;
  std::vector<double> offsets;
  auto clipped = geom::ConvexCell::box(Vec::Constant(2, -3.0), Vec::Constant(2, 3.0));
  for (const auto& d : grid) {
    const double h = 1.0 + 0.3 * d[0] * d[0];
    normals.push_back(d.vec());
    offsets.push_back(h);
    clipped = clipped.clip(d.vec(), h);
  }
  const auto fast = geom::ConvexCell::halfplanes(normals, offsets);
  EXPECT_NEAR(fast.volume(), clipped.volume(), 1e-12);
  EXPECT_TRUE(geom::ConvexCell::halfplanes({v2(1, 0), v2(-1, 0)}, {1.0, 1.0}).empty());
}

TEST(Geometry, PolyhedronHullFacetsMergeCoplanarTriangles) {
  std::vector<Vec> pts;
  for (int i = 0; i < 8; ++i) {
    pts.push_back(v3(i & 1, (i >> 1) & 1, (i >> 2) & 1));
  }
  pts.push_back(v3(0.5, 0.5, 0.5));
  const auto facets = geom::hull3d_facets(pts);
  EXPECT_EQ(facets.size(), 6u);
  for (const auto& f : facets) {
    EXPECT_EQ(f.loop.size(), 4u);
  }
}
