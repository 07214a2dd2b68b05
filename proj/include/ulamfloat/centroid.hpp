// L_p centroid bodies Z_p(K) of volume-one bodies.
#pragma once

#include "ulamfloat/body.hpp"
#include "ulamfloat/float_bodies.hpp"

namespace ulamfloat {

struct ZpValue {
  double h;  ///< (int_K |<x, theta>|^p dx)^{1/p}
  Vec x;     ///< gradient of the support function: the boundary point with normal theta
};

/// Support function of Z_p(K) and its gradient. K must have volume 1 (relative 1e-9) and
/// 1 <= p < infinity. Polytopes use exact piecewise-polynomial section moments; balls
/// and ellipsoids use tanh-sinh quadrature of the closed-form section measure.
ZpValue zp_support(const Body& body, double p, const Direction& theta);

/// Z_p(K) sampled on an antipodally closed grid of m directions.
BodyApproximation build_zp_body(const Body& body, double p, int m, int threads = 0);

}  // namespace ulamfloat
