// Ulam floating bodies M_delta(K, phi), weighted floating bodies F_delta(K, phi) and
// their two-sided polytope approximations.
#pragma once

#include "ulamfloat/caps.hpp"
#include "ulamfloat/geometry.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace ulamfloat {

enum class ApproxKind { Ulam, Floating, ConvexFloating, CentroidZp };

std::string to_string(ApproxKind kind);

struct UlamSupport {
  double h;  ///< support value <x, theta>
  Vec x;     ///< boundary point of M_delta with outer normal theta
  CapCut cut;
};

/// Support value and boundary point of M_delta(K, phi) in direction theta: the
/// phi-barycenter of the cap of mass delta.
UlamSupport ulam_support(const Body& body, const Weight& w, const Direction& theta, double delta,
                         const CapOptions& opts = {});

/// Inner hull of boundary points plus outer intersection of support halfspaces.
struct BodyApproximation {
  ApproxKind kind = ApproxKind::Ulam;
  int dim = 0;
  double param = 0.0;  ///< delta, or p for centroid bodies
  std::string weight_id;
  std::vector<Direction> directions;
  std::vector<double> support_values;
  std::vector<Vec> boundary_points;
  /// Hausdorff distance between the inner hull and the outer intersection (n <= 3);
  /// absent for outer-only approximations and for n >= 4.
  std::optional<double> gap_estimate;
  bool has_cells = false;
  geom::ConvexCell inner;
  geom::ConvexCell outer;
  double inner_volume = 0.0;
  double outer_volume = 0.0;
  /// Set when the outer intersection is empty (floating bodies with too large delta).
  bool empty = false;
  std::vector<int> empty_witness;
  std::string diagnostic;
};

struct ApproxOptions {
  CapOptions caps;
  int threads = 0;
};

/// M_delta(K, phi) sampled on an antipodally closed grid of m directions (m >= 2n+2).
BodyApproximation build_ulam_body(const Body& body, const Weight& w, double delta, int m,
                                  const ApproxOptions& opts = {});

/// F_delta(K, phi) as the intersection of the cut halfspaces {<x, theta> <= d(theta, delta)}
/// over the grid. Outer-only: boundary points are the vertices of the intersection.
BodyApproximation build_floating_body(const Body& body, const Weight& w, double delta, int m,
                                      const ApproxOptions& opts = {});

/// Support of the outer intersection of an approximation.
double floating_support(const BodyApproximation& approx, const Vec& theta);

/// Assembles inner hull, outer intersection and gap estimate from sampled data.
/// `container` (may be null) is a polytope known to contain the body.
void assemble_cells(BodyApproximation& approx, const geom::ConvexCell* container);

struct RadialBracket {
  double lo;
  double hi;
};

/// Bounds on the radial function of the approximated body along u (origin interior).
RadialBracket radial_boundary(const BodyApproximation& approx, const Vec& u);

/// Radial bounds for a live planar Ulam body: bisects in the normal angle between grid
/// directions until the chord/tangent bracket is below rel_tol relative width.
class UlamRadialOracle2D {
 public:
  UlamRadialOracle2D(Body body, Weight w, double delta, const BodyApproximation& seed,
                     CapOptions opts = {});
  RadialBracket query(const Vec& u, double rel_tol) const;

 private:
  Body body_;
  Weight w_;
  double delta_;
  CapOptions opts_;
  std::vector<double> angles_;
  std::vector<Vec> points_;
};

struct VolumeDifference {
  double lo;
  double hi;
  /// Embedded-rule estimate of the boundary quadrature error (already added to the bracket).
  double quadrature_error;
  int samples;
};

/// Bracket for |K| - |L| from the boundary integral
///   (1/n) * int_{dK} <x, N(x)> (1 - (|x_L| / |x|)^n) dmu(x),
/// where |x_L| is bounded by `radial_l(x / |x|)`, the radial function of L at that unit vector.
VolumeDifference volume_difference(const Body& k,
                                   const std::function<RadialBracket(const Vec&)>& radial_l,
                                   int resolution, int threads = 0);
VolumeDifference volume_difference(const Body& k, const BodyApproximation& l, int resolution,
                                   int threads = 0);

/// Number of boundary points that fail the strict convexity proxy: points must be
/// pairwise distinct and each the unique maximizer of its own direction.
int strict_convexity_violations(const BodyApproximation& approx, double tol);

}  // namespace ulamfloat
