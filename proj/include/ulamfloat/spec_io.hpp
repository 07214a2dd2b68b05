// JSON descriptions of bodies and weights.
//
// Bodies:
//   {"type": "ball", "center": [0, 0], "radius": 1}
//   {"type": "ellipsoid", "center": [0, 0], "shape": [[1, 0], [0, 4]]}
//   {"type": "ellipsoid", "center": [0, 0], "semi_axes": [1, 2]}
//   {"type": "polytope", "vertices": [[0, 0], [1, 0], [0, 1]]}
// with optional "normalize": true (volume 1, barycenter 0) or "recenter": true.
//
// Weights:
//   {"type": "constant", "value": 1}
//   {"type": "gaussian", "center": [0, 0], "sigma": 1, "scale": 1}
//   {"type": "phi_p", "p": 2, "extension": "radial", "collar": 0.1}   (p may be "inf")
#pragma once

#include "ulamfloat/body.hpp"
#include "ulamfloat/weight.hpp"

#include <string>

namespace ulamfloat {

Body parse_body(const std::string& json_text);
Body load_body(const std::string& path);

/// phi_p weights are built on `host`.
Weight parse_weight(const std::string& json_text, const Body& host);
Weight load_weight(const std::string& path, const Body& host);

}  // namespace ulamfloat
