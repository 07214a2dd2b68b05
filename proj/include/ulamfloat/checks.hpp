// Grid verifications of the inclusion and symmetry statements for Ulam floating bodies.
#pragma once

#include "ulamfloat/float_bodies.hpp"

#include <string>
#include <utility>

namespace ulamfloat {

/// F_{(1-1/e) delta}(K, phi) ⊆ M_delta(K, phi) ⊆ F_{delta/e}(K, phi) on a direction grid:
///   left:  d(theta, (1-1/e) delta) <= h_M(theta) for every grid theta;
///   right: <x(theta, delta), beta> <= d(beta, delta/e) for every pair of grid directions.
struct SandwichReport {
  bool passed = false;
  int m = 0;
  double delta = 0.0;
  double tolerance = 0.0;
  double left_margin = 0.0;   ///< min over theta of h_M - d(theta, (1-1/e) delta)
  double right_margin = 0.0;  ///< min over (theta, beta) of d(beta, delta/e) - <x, beta>
  int left_witness = -1;
  std::pair<int, int> right_witness{-1, -1};
};

SandwichReport sandwich_check(const Body& body, const Weight& w, double delta, int m,
                              const ApproxOptions& opts = {}, double tol = 1e-8);

/// K_delta ⊆ M_delta(K) ⊆ e Z_{log(1/delta)}(K) for symmetric volume-one K, delta < 1/e.
/// The left side uses the support of the gridded halfspace intersection for K_delta,
/// which over-approximates K_delta.
struct ZpSandwichReport {
  bool passed = false;
  int m = 0;
  double delta = 0.0;
  double p = 0.0;
  double tolerance = 0.0;
  double left_margin = 0.0;   ///< min of h_M - h_{K_delta}
  double right_margin = 0.0;  ///< min of e h_{Z_p} - h_M
  int left_witness = -1;
  int right_witness = -1;
};

ZpSandwichReport zp_sandwich_check(const Body& body, double delta, int m,
                                   const ApproxOptions& opts = {}, double tol = 1e-8);

/// For volume-one K with barycenter 0 and phi = 1:
///   h_{M_{1-delta}}(theta) = delta/(1-delta) h_{M_delta}(-theta),
///   h_{M_{1/2}}(theta) = h_{M_{1/2}}(-theta),
///   delta x(theta, delta) + (1-delta) x(-theta, 1-delta) = 0 on 64 directions.
struct SymmetryReport {
  bool passed = false;
  int m = 0;
  double delta = 0.0;
  double identity_deviation = 0.0;
  double central_deviation = 0.0;
  double archimedes_deviation = 0.0;
  double tolerance = 0.0;
  double archimedes_tolerance = 0.0;
  int witness = -1;
};

SymmetryReport symmetry_check(const Body& body, double delta, int m,
                              const ApproxOptions& opts = {}, double tol = 1e-8,
                              double archimedes_tol = 1e-9);

}  // namespace ulamfloat
