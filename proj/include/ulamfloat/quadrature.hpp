// One-dimensional and simplex quadrature rules.
#pragma once

#include "ulamfloat/core.hpp"

#include <functional>
#include <vector>

namespace ulamfloat::quad {

struct Rule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// n-point Gauss-Legendre rule on [-1, 1]. Rules are computed once and cached.
const Rule& gauss_legendre(int n);

/// Gauss-Legendre rule mapped to [a, b].
Rule gauss_legendre(int n, double a, double b);

struct AdaptiveResult {
  Vec value;
  double error = 0.0;
  int evaluations = 0;
};

/// Adaptive Gauss-Kronrod (7/15) integration of a vector-valued integrand.
/// The error estimate of a panel is the max-norm of the Kronrod/Gauss difference;
/// panels are bisected until the total estimate falls below max(abs_tol, rel_tol*|I|).
AdaptiveResult integrate_adaptive(const std::function<Vec(double)>& f, double a, double b,
                                  double rel_tol, double abs_tol = 0.0, int max_depth = 18);

/// Scalar convenience wrapper around integrate_adaptive.
double integrate_adaptive_scalar(const std::function<double(double)>& f, double a, double b,
                                 double rel_tol, double abs_tol = 0.0, double* error = nullptr);

/// Points of a simplex rule in barycentric coordinates with weights summing to 1.
struct SimplexRule {
  std::vector<Vec> barycentric;
  std::vector<double> weights;
};

/// Collapsed-coordinate (Duffy) product Gauss rule on the reference triangle (dim 2)
/// or tetrahedron (dim 3), exact for polynomials of degree 2*order-1-dim.
const SimplexRule& simplex_rule(int dim, int order);

}  // namespace ulamfloat::quad
