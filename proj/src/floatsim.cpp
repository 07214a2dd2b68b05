#include "ulamfloat/floatsim.hpp"

#include "ulamfloat/caps.hpp"
#include "ulamfloat/parallel.hpp"

#include <boost/math/tools/toms748_solve.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace ulamfloat {

namespace {

void require_float_body(const Body& body, double rho) {
  if (body.dim() != 2) {
    throw InvalidInput("floating simulation needs a planar body");
  }
  if (!(rho > 0.0 && rho < 1.0)) {
    throw InvalidInput("density must satisfy 0 < rho < 1");
  }
  if (body.barycenter().norm() > 1e-9 * body.diameter()) {
    throw InvalidInput("floating simulation needs the barycenter at the origin");
  }
}

Vec buoyancy_center(const Body& body, double rho, const Vec& up) {
  const Direction down(-up);
  return cap_barycenter(body, Weight::constant(1.0), down,
                        cut_height(body, Weight::constant(1.0), down, rho * body.volume()));
}

}  // namespace

FloatState float_state(const Body& body, double rho, const Vec& up) {
  require_float_body(body, rho);
  const Weight one = Weight::constant(1.0);
  const Direction down(-up);
  FloatState s;
  s.rho = rho;
  s.up = -down.vec();
  s.submerged = rho * body.volume();
  const CapCut cut = cap_cut(body, one, down, s.submerged);
  s.waterline = -cut.d;
  s.buoyancy = cut.barycenter;
  s.emerged = -s.submerged / (body.volume() - s.submerged) * s.buoyancy;
  return s;
}

double float_torque(const Body& body, double rho, double angle) {
  require_float_body(body, rho);
  const Vec u = Direction::planar(angle).vec();
  return cross2(u, -buoyancy_center(body, rho, u));
}

double collinearity_deviation(const Body& body, double rho, double angle) {
  const FloatState s = float_state(body, rho, Direction::planar(angle).vec());
  return std::abs(cross2(s.buoyancy, s.emerged));
}

EquilibriumResult equilibrium_directions(const Body& body, double rho, int samples, double tol,
                                         int threads) {
  require_float_body(body, rho);
  if (samples < 8) {
    throw InvalidInput("equilibrium scan needs at least 8 samples");
  }
  const double two_pi = 2.0 * std::numbers::pi;
  std::vector<double> tau(samples);
  parallel_for(
      samples, [&](int i) { tau[i] = float_torque(body, rho, two_pi * i / samples); }, threads);
  EquilibriumResult r;
  r.scanned = samples;
  for (double t : tau) {
    r.max_abs_torque = std::max(r.max_abs_torque, std::abs(t));
  }
  const double zero_tol = tol * std::max(1.0, body.diameter());
  if (r.max_abs_torque <= zero_tol) {
    r.every_position = true;
    for (int i = 0; i < samples; ++i) {
      r.angles.push_back(two_pi * i / samples);
    }
    return r;
  }
  std::vector<double> roots;
  for (int i = 0; i < samples; ++i) {
    const int j = (i + 1) % samples;
    const double a = two_pi * i / samples;
    const double b = two_pi * (i + 1) / samples;
    if (std::abs(tau[i]) <= zero_tol) {
      roots.push_back(a);
      continue;
    }
    if (std::abs(tau[j]) <= zero_tol || (tau[i] > 0.0) == (tau[j] > 0.0)) {
      continue;
    }
    auto f = [&](double x) { return float_torque(body, rho, x); };
    std::uintmax_t iters = 100;
    const auto br = boost::math::tools::toms748_solve(
        f, a, b, tau[i], tau[j],
        [&](double lo, double hi) { return hi - lo <= 1e-14 * two_pi; }, iters);
    roots.push_back(0.5 * (br.first + br.second));
  }
  std::sort(roots.begin(), roots.end());
  for (double x : roots) {
    x = std::fmod(x, two_pi);
    if (r.angles.empty() || x - r.angles.back() > 1e-9) {
      r.angles.push_back(x);
    }
  }
  if (r.angles.size() > 1 && r.angles.back() - r.angles.front() > two_pi - 1e-9) {
    r.angles.pop_back();
  }
  return r;
}

RoundnessReport roundness(const BodyApproximation& approx) {
  if (approx.dim != 2) {
    throw InvalidInput("roundness needs a planar approximation");
  }
  const auto& pts = approx.boundary_points;
  const int m = static_cast<int>(pts.size());
  if (m < 3) {
    throw InvalidInput("roundness needs at least three boundary points");
  }
  // |x|^2 = 2 <c, x> + k in the least-squares sense.
  Mat a(m, 3);
  Vec b(m);
  for (int i = 0; i < m; ++i) {
    a(i, 0) = 2.0 * pts[i][0];
    a(i, 1) = 2.0 * pts[i][1];
    a(i, 2) = 1.0;
    b[i] = pts[i].squaredNorm();
  }
  const Vec sol = a.colPivHouseholderQr().solve(b);
  RoundnessReport r;
  r.center = sol.head(2);
  r.radius = std::sqrt(sol[2] + r.center.squaredNorm());
  r.min_radius = std::numeric_limits<double>::infinity();
  for (const auto& p : pts) {
    const double d = (p - r.center).norm();
    r.min_radius = std::min(r.min_radius, d);
    r.max_radius = std::max(r.max_radius, d);
  }
  r.score = r.min_radius / r.max_radius;
  return r;
}

}  // namespace ulamfloat
