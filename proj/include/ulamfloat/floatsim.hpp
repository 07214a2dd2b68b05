// Planar floating equilibria: a body of density rho floating in a fluid of density 1.
#pragma once

#include "ulamfloat/body.hpp"
#include "ulamfloat/float_bodies.hpp"

#include <vector>

namespace ulamfloat {

/// The body floats with "up" direction u: the submerged part is the cap in direction -u
/// of volume rho |K|.
struct FloatState {
  double rho = 0.0;
  Vec up;
  double waterline = 0.0;  ///< height of the water surface along u
  double submerged = 0.0;  ///< rho |K|
  Vec buoyancy;            ///< barycenter of the submerged part
  Vec emerged;             ///< barycenter of the emerged part
};

/// Requires a planar body with barycenter at the origin and 0 < rho < 1.
FloatState float_state(const Body& body, double rho, const Vec& up);

/// Torque about the barycenter from buoyancy acting upward at the buoyancy center:
/// cross2(u, -b). Zero exactly at equilibrium directions.
double float_torque(const Body& body, double rho, double angle);

/// |cross2(buoyancy center, emerged barycenter)|; zero when both lie on a common line
/// through the barycenter.
double collinearity_deviation(const Body& body, double rho, double angle);

struct EquilibriumResult {
  std::vector<double> angles;  ///< equilibrium angles of u in [0, 2 pi)
  bool every_position = false;  ///< torque vanishes on the whole scan grid
  double max_abs_torque = 0.0;
  int scanned = 0;
};

/// Scans `samples` angles, refines sign changes of the torque and reports the roots.
EquilibriumResult equilibrium_directions(const Body& body, double rho, int samples = 720,
                                         double tol = 1e-12, int threads = 0);

struct RoundnessReport {
  Vec center;
  double radius = 0.0;
  double min_radius = 0.0;
  double max_radius = 0.0;
  double score = 0.0;  ///< min_radius / max_radius, 1 for a circle
};

/// Least-squares circle through the boundary points of a planar approximation.
RoundnessReport roundness(const BodyApproximation& approx);

}  // namespace ulamfloat
