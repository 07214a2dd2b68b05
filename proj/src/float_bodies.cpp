#include "ulamfloat/float_bodies.hpp"

#include "ulamfloat/parallel.hpp"
#include "ulamfloat/sphere.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

namespace ulamfloat {

namespace {

void check_grid_size(int n, int m) {
  if (m < 2 * n + 2) {
    throw InvalidInput("direction count m must be at least 2n+2");
  }
  if (m % 2 != 0) {
    throw InvalidInput("direction count m must be even (antipodally closed grids)");
  }
}

geom::ConvexCell bounding_cell(const Body& body) {
  if (body.kind() == BodyKind::Polytope) {
    return body.cell();
  }
  const int n = body.dim();
  Vec lo(n);
  Vec hi(n);
  for (int j = 0; j < n; ++j) {
    const Vec e = Vec::Unit(n, j);
    lo[j] = -body.support(Vec(-e));
    hi[j] = body.support(e);
  }
  return geom::ConvexCell::box(lo, hi);
}

}  // namespace

std::string to_string(ApproxKind kind) {
  switch (kind) {
    case ApproxKind::Ulam:
      return "ulam";
    case ApproxKind::Floating:
      return "floating";
    case ApproxKind::ConvexFloating:
      return "convex_floating";
    case ApproxKind::CentroidZp:
      return "centroid_zp";
  }
  return "unknown";
}

UlamSupport ulam_support(const Body& body, const Weight& w, const Direction& theta, double delta,
                         const CapOptions& opts) {
  if (!(delta > 0.0)) {
    throw InvalidInput("delta must be positive");
  }
  CapCut cut = cap_cut(body, w, theta, delta, opts);
  const double h = theta.dot(cut.barycenter);
  Vec x = cut.barycenter;
  return {h, std::move(x), std::move(cut)};
}

void assemble_cells(BodyApproximation& approx, const geom::ConvexCell* container) {
  const int n = approx.dim;
  if (n != 2 && n != 3) {
    approx.has_cells = false;
    return;
  }
  approx.has_cells = true;
  geom::ConvexCell outer;
  if (container != nullptr && !container->empty()) {
    outer = *container;
  } else {
    double r = 1.0;
    for (double h : approx.support_values) {
      r = std::max(r, std::abs(h));
    }
    for (const auto& x : approx.boundary_points) {
      r = std::max(r, x.norm());
    }
    outer = geom::ConvexCell::box(Vec::Constant(n, -4.0 * r), Vec::Constant(n, 4.0 * r));
  }
  bool done = false;
  if (n == 2) {
    std::vector<Vec> normals = outer.plane_normals();
    std::vector<double> offsets = outer.plane_offsets();
    for (std::size_t i = 0; i < approx.directions.size(); ++i) {
      normals.push_back(approx.directions[i].vec());
      offsets.push_back(approx.support_values[i]);
    }
    try {
      geom::ConvexCell fast = geom::ConvexCell::halfplanes(normals, offsets);
      if (!fast.empty()) {
        outer = std::move(fast);
        done = true;
      }
    } catch (const NumericalError&) {
    }
  }
  for (std::size_t i = 0; !done && i < approx.directions.size(); ++i) {
    outer = outer.clip(approx.directions[i].vec(), approx.support_values[i]);
    if (outer.empty()) {
      approx.empty = true;
      approx.empty_witness = {static_cast<int>(i)};
      std::ostringstream os;
      os << "halfspace intersection became empty at direction index " << i;
      approx.diagnostic = os.str();
      break;
    }
  }
  approx.outer = outer;
  approx.outer_volume = outer.empty() ? 0.0 : outer.volume();
  if (approx.boundary_points.size() >= static_cast<std::size_t>(n + 1)) {
    try {
      approx.inner = geom::ConvexCell::hull_of(approx.boundary_points);
    } catch (const InvalidInput&) {
      approx.inner = geom::ConvexCell();
    }
  }
  approx.inner_volume = approx.inner.empty() ? 0.0 : approx.inner.volume();
  if (!approx.inner.empty() && !outer.empty()) {
    double gap = 0.0;
    for (const auto& v : outer.vertices()) {
      gap = std::max(gap, approx.inner.distance(v));
    }
    approx.gap_estimate = gap;
  }
}

BodyApproximation build_ulam_body(const Body& body, const Weight& w, double delta, int m,
                                  const ApproxOptions& opts) {
  const int n = body.dim();
  check_grid_size(n, m);
  if (!(delta > 0.0)) {
    throw InvalidInput("delta must be positive");
  }
  BodyApproximation approx;
  approx.kind = ApproxKind::Ulam;
  approx.dim = n;
  approx.param = delta;
  approx.weight_id = w.id();
  approx.directions = direction_grid(n, m);
  approx.support_values.assign(m, 0.0);
  approx.boundary_points.assign(m, Vec());
  parallel_for(
      m,
      [&](int i) {
        const auto s = ulam_support(body, w, approx.directions[i], delta, opts.caps);
        approx.support_values[i] = s.h;
        approx.boundary_points[i] = s.x;
      },
      opts.threads);
  if (n <= 3) {
    const geom::ConvexCell container = bounding_cell(body);
    assemble_cells(approx, &container);
  }
  return approx;
}

BodyApproximation build_floating_body(const Body& body, const Weight& w, double delta, int m,
                                      const ApproxOptions& opts) {
  const int n = body.dim();
  check_grid_size(n, m);
  if (!(delta > 0.0)) {
    throw InvalidInput("delta must be positive");
  }
  BodyApproximation approx;
  const auto c = w.constant_value();
  approx.kind = c && *c == 1.0 ? ApproxKind::ConvexFloating : ApproxKind::Floating;
  approx.dim = n;
  approx.param = delta;
  approx.weight_id = w.id();
  approx.directions = direction_grid(n, m);
  approx.support_values.assign(m, 0.0);
  parallel_for(
      m,
      [&](int i) {
        approx.support_values[i] = cut_height(body, w, approx.directions[i], delta, opts.caps);
      },
      opts.threads);
  const int half = m / 2;
  for (int i = 0; i < half; ++i) {
    if (approx.support_values[i] + approx.support_values[i + half] < 0.0) {
      approx.empty = true;
      approx.empty_witness = {i, i + half};
      std::ostringstream os;
      os << "antipodal cuts at direction indices " << i << " and " << i + half
         << " leave no room: d(theta) + d(-theta) = "
         << approx.support_values[i] + approx.support_values[i + half] << " < 0";
      approx.diagnostic = os.str();
      return approx;
    }
  }
  if (n <= 3) {
    const geom::ConvexCell container = bounding_cell(body);
    assemble_cells(approx, &container);
    if (!approx.empty) {
      approx.boundary_points = approx.outer.vertices();
      approx.inner = approx.outer;
      approx.inner_volume = approx.outer_volume;
    }
    approx.gap_estimate.reset();
  }
  return approx;
}

double floating_support(const BodyApproximation& approx, const Vec& theta) {
  if (!approx.has_cells) {
    throw InvalidInput("floating_support needs an approximation in dimension 2 or 3");
  }
  if (approx.empty) {
    throw InvalidInput("approximation is empty: " + approx.diagnostic);
  }
  return approx.outer.support(theta);
}

RadialBracket radial_boundary(const BodyApproximation& approx, const Vec& u) {
  if (!approx.has_cells || approx.inner.empty()) {
    throw InvalidInput("radial queries need a two-sided approximation in dimension 2 or 3");
  }
  const Vec zero = Vec::Zero(approx.dim);
  if (!approx.inner.contains(zero, 0.0)) {
    throw InvalidInput("origin lies outside the inner hull of the approximation");
  }
  const Vec dir = u.normalized();
  return {approx.inner.ray_exit(zero, dir), approx.outer.ray_exit(zero, dir)};
}

UlamRadialOracle2D::UlamRadialOracle2D(Body body, Weight w, double delta,
                                       const BodyApproximation& seed, CapOptions opts)
    : body_(std::move(body)), w_(std::move(w)), delta_(delta), opts_(opts) {
  if (seed.dim != 2 || seed.kind != ApproxKind::Ulam) {
    throw InvalidInput("the refined radial oracle needs a planar Ulam body approximation");
  }
  const std::size_t m = seed.directions.size();
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::vector<double> ang(m);
  for (std::size_t i = 0; i < m; ++i) {
    ang[i] = std::atan2(seed.directions[i][1], seed.directions[i][0]);
  }
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return ang[a] < ang[b]; });
  for (std::size_t i : order) {
    angles_.push_back(ang[i]);
    points_.push_back(seed.boundary_points[i]);
  }
  for (std::size_t i = 0; i < m; ++i) {
    if (cross2(points_[i], points_[(i + 1) % m]) <= 0.0) {
      throw InvalidInput("origin must lie inside the Ulam body for radial queries");
    }
  }
}

RadialBracket UlamRadialOracle2D::query(const Vec& u_in, double rel_tol) const {
  const Vec u = u_in.normalized();
  const std::size_t m = points_.size();
  std::size_t ia = m;
  for (std::size_t i = 0; i < m; ++i) {
    const Vec& a = points_[i];
    const Vec& b = points_[(i + 1) % m];
    if (cross2(a, u) >= 0.0 && cross2(u, b) > 0.0) {
      ia = i;
      break;
    }
  }
  if (ia == m) {
    throw NumericalError("ray does not meet the sampled boundary");
  }
  double alpha_a = angles_[ia];
  double alpha_b = angles_[(ia + 1) % m];
  if (alpha_b <= alpha_a) {
    alpha_b += 2.0 * std::numbers::pi;
  }
  Vec xa = points_[ia];
  Vec xb = points_[(ia + 1) % m];
  auto bracket = [&]() {
    const Vec ta = Direction::planar(alpha_a).vec();
    const Vec tb = Direction::planar(alpha_b).vec();
    // Chord: solve r u = xa + s (xb - xa).
    const Vec e = xb - xa;
    const double den = cross2(u, e);
    double lo = den != 0.0 ? cross2(xa, e) / den : std::min(xa.norm(), xb.norm());
    double hi = std::numeric_limits<double>::infinity();
    for (const auto& [t, x] : {std::pair<Vec, Vec>{ta, xa}, std::pair<Vec, Vec>{tb, xb}}) {
      const double c = u.dot(t);
      if (c > 0.0) {
        hi = std::min(hi, x.dot(t) / c);
      }
    }
    return RadialBracket{lo, std::max(lo, hi)};
  };
  RadialBracket r = bracket();
  for (int it = 0; it < 80 && r.hi - r.lo > rel_tol * r.lo; ++it) {
    const double mid = 0.5 * (alpha_a + alpha_b);
    const Vec xm =
        ulam_support(body_, w_, Direction::planar(mid), delta_, opts_).x;
    if (cross2(xm, u) >= 0.0) {
      alpha_a = mid;
      xa = xm;
    } else {
      alpha_b = mid;
      xb = xm;
    }
    r = bracket();
  }
  return r;
}

VolumeDifference volume_difference(const Body& k,
                                   const std::function<RadialBracket(const Vec&)>& radial_l,
                                   int resolution, int threads) {
  if (!k.origin_interior()) {
    throw InvalidInput("volume_difference needs the origin in the interior of K");
  }
  const int n = k.dim();
  const BoundaryRule rule = k.boundary_quadrature(resolution);
  const std::size_t count = rule.samples.size();
  std::vector<double> lo_terms(count);
  std::vector<double> hi_terms(count);
  parallel_for(
      static_cast<int>(count),
      [&](int i) {
        const auto& s = rule.samples[i];
        const double rx = s.x.norm();
        const RadialBracket r = radial_l(s.x / rx);
        if (r.lo > rx * (1.0 + 1e-9)) {
          throw InvalidInput("L is not contained in K (radial bound exceeds the boundary of K)");
        }
        const double scale = s.support_number / n;
        lo_terms[i] = scale * (1.0 - std::pow(std::min(r.hi, rx) / rx, n));
        hi_terms[i] = scale * (1.0 - std::pow(std::min(r.lo, rx) / rx, n));
      },
      threads);
  double lo = 0.0;
  double hi = 0.0;
  double fine = 0.0;
  double coarse = 0.0;
  double magnitude = 0.0;
  for (std::size_t i = 0; i < count; ++i) {
    const auto& s = rule.samples[i];
    lo += s.weight * lo_terms[i];
    hi += s.weight * hi_terms[i];
    const double mid = 0.5 * (lo_terms[i] + hi_terms[i]);
    fine += s.weight * mid;
    coarse += s.coarse_weight * mid;
    magnitude += std::abs(s.weight) * (std::abs(lo_terms[i]) + std::abs(hi_terms[i]));
  }
  const double rounding =
      static_cast<double>(count + n + 8) * std::numeric_limits<double>::epsilon() * magnitude;
  const double err = (rule.has_coarse ? std::abs(fine - coarse) : 0.0) + rounding;
  return {lo - err, hi + err, err, static_cast<int>(count)};
}

VolumeDifference volume_difference(const Body& k, const BodyApproximation& l, int resolution,
                                   int threads) {
  return volume_difference(
      k, [&](const Vec& x) { return radial_boundary(l, x); }, resolution, threads);
}

int strict_convexity_violations(const BodyApproximation& approx, double tol) {
  const auto& pts = approx.boundary_points;
  int violations = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const Vec& t = approx.directions[i].vec();
    const double hi = pts[i].dot(t);
    for (std::size_t j = 0; j < pts.size(); ++j) {
      if (j == i) {
        continue;
      }
      if ((pts[i] - pts[j]).norm() <= tol || pts[j].dot(t) >= hi - tol) {
        ++violations;
        break;
      }
    }
  }
  return violations;
}

}  // namespace ulamfloat
