// Weighted caps K ∩ {<x, theta> >= d}: mass, first moment, cut height and barycenter.
#pragma once

#include "ulamfloat/body.hpp"
#include "ulamfloat/weight.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace ulamfloat {

enum class CapBackend {
  Auto,
  Analytic,         ///< ball or ellipsoid with constant weight (incomplete beta)
  ExactClip,        ///< polytope with constant weight (exact clipping)
  ClipCubature,     ///< polytope with a smooth weight (exact clipping + simplex cubature)
  SliceQuadrature,  ///< ball or ellipsoid with a smooth weight (adaptive slices)
  MonteCarlo        ///< stratified sampling
};

std::string to_string(CapBackend backend);
CapBackend backend_from_string(const std::string& name);

struct CapOptions {
  CapBackend backend = CapBackend::Auto;
  /// Relative tolerance of the adaptive slice quadrature.
  double rel_tol = 1e-12;
  /// Product Gauss order of the simplex cubature (polytopes with smooth weights).
  int simplex_order = 6;
  /// Resolution of the S^{n-2} rule inside slice sections (n >= 3).
  int sphere_resolution = 24;
  /// Gauss-Legendre nodes in the radial variable of slice sections.
  int radial_nodes = 16;
  std::int64_t mc_samples = 400000;
  std::uint64_t seed = 1;
  /// Use analytic or exact backends when the weight is constant on the body.
  bool detect_constant = true;
  /// Compute error estimates (costs an extra lower-order evaluation for cubature).
  bool estimate_error = true;
};

struct CapMoments {
  double mass = 0.0;
  Vec first;  ///< integral of y * phi(y) over the region
  double error = 0.0;
  CapBackend backend = CapBackend::Auto;
};

/// Backend that `opts` selects for the given body and weight.
CapBackend resolve_backend(const Body& body, const Weight& w, const CapOptions& opts);

/// Mass and first moment of the cap K ∩ {<x, theta> >= d}.
CapMoments cap_moments(const Body& body, const Weight& w, const Direction& theta, double d,
                       const CapOptions& opts = {});

double cap_mass(const Body& body, const Weight& w, const Direction& theta, double d,
                const CapOptions& opts = {});
Vec cap_barycenter(const Body& body, const Weight& w, const Direction& theta, double d,
                   const CapOptions& opts = {});
/// Integral of <theta, y> phi(y) over the cap.
double cap_first_moment(const Body& body, const Weight& w, const Direction& theta, double d,
                        const CapOptions& opts = {});

struct CapCut {
  Direction theta;
  double d;
  double mass;
  Vec barycenter;
  CapBackend backend;
  double error_estimate;
};

/// The height d with cap_mass(theta, d) = delta, for 0 <= delta <= total mass.
double cut_height(const Body& body, const Weight& w, const Direction& theta, double delta,
                  const CapOptions& opts = {});

/// Cut height together with the weighted barycenter of the cap.
CapCut cap_cut(const Body& body, const Weight& w, const Direction& theta, double delta,
               const CapOptions& opts = {});

struct MassEstimate {
  double value;
  double error;
};

/// Integral of phi over the body.
MassEstimate total_mass(const Weight& w, const Body& body, const CapOptions& opts = {});

struct Halfspace {
  Vec a;
  double b;  ///< region {<x, a> >= b}
};

/// Mass and first moment of K ∩ all halfspaces. Exact for polytopes; sampled otherwise.
CapMoments region_moments(const Body& body, const Weight& w, const std::vector<Halfspace>& hs,
                          const CapOptions& opts = {});

/// Volume of the cap {<u, theta> >= t} of the unit ball in R^n.
double unit_cap_volume(int n, double t);
/// Integral of <u, theta> over that cap.
double unit_cap_moment(int n, double t);

}  // namespace ulamfloat
