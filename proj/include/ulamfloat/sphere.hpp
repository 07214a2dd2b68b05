// Direction grids and quadrature on the unit sphere.
#pragma once

#include "ulamfloat/core.hpp"

#include <vector>

namespace ulamfloat {

/// Antipodally closed direction grid of size m (m even): grid[i + m/2] == -grid[i].
///   n = 2: uniform angles 2*pi*i/m.
///   n = 3: Fibonacci lattice on the upper hemisphere plus its reflection.
///   n >= 4: Halton points pushed through the normal quantile, plus reflections.
std::vector<Direction> direction_grid(int n, int m);

struct SphereNode {
  Vec u;
  double weight;
};

/// Product quadrature on S^{n-1}, weights summing to the sphere area.
/// n = 1 gives the two points of S^0 with unit weights; n = 2 the trapezoid rule with
/// `resolution` points; n >= 3 Gauss-Legendre in each polar angle and a trapezoid rule
/// with 2*resolution points in the azimuth.
std::vector<SphereNode> sphere_quadrature(int n, int resolution);

}  // namespace ulamfloat
