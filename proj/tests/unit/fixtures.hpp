#pragma once

#include "ulamfloat/body.hpp"

#include <numbers>
#include <vector>

namespace fixtures {

using ulamfloat::Body;
using ulamfloat::Mat;
using ulamfloat::Vec;

constexpr double kPi = std::numbers::pi;

inline Vec v2(double a, double b) {
  Vec v(2);
  v << a, b;
  return v;
}

inline Vec v3(double a, double b, double c) {
  Vec v(3);
  v << a, b, c;
  return v;
}

inline Body disc() { return Body::ball(Vec::Zero(2), 1.0); }

inline Body unit_square() {
  return Body::polytope({v2(0, 0), v2(1, 0), v2(1, 1), v2(0, 1)});
}

inline Body centered_square() {
  return Body::polytope({v2(-0.5, -0.5), v2(0.5, -0.5), v2(0.5, 0.5), v2(-0.5, 0.5)});
}

inline Body triangle() { return Body::polytope({v2(0.0, 0.0), v2(1.0, 0.0), v2(0.2, 0.9)}); }

inline Body ellipse12() {
  Mat a(2, 2);
  a << 1.0, 0.0, 0.0, 0.25;
  return Body::ellipsoid(Vec::Zero(2), a);
}

inline Body cube() {
  std::vector<Vec> pts;
  for (int i = 0; i < 8; ++i) {
    pts.push_back(v3(i & 1 ? 0.5 : -0.5, i & 2 ? 0.5 : -0.5, i & 4 ? 0.5 : -0.5));
  }
  return Body::polytope(pts);
}

inline Body tetrahedron() {
  return Body::polytope({v3(1, 1, 1), v3(1, -1, -1), v3(-1, 1, -1), v3(-1, -1, 1)});
}

}  // namespace fixtures
