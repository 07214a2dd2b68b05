#include "ulamfloat/cap_calculus.hpp"

#include "ulamfloat/caps.hpp"
#include "ulamfloat/quadrature.hpp"
#include "ulamfloat/random.hpp"
#include "ulamfloat/sphere.hpp"

#include <algorithm>
#include <cmath>

namespace ulamfloat {

namespace {

void require_meets(const Body& body, const Vec& a) {
  if (a.size() != body.dim()) {
    throw InvalidInput("cap vector dimension does not match the body");
  }
  if (!hyperplane_meets_interior(body, a)) {
    throw InvalidInput("the hyperplane <x,a> = 1 does not meet the interior of K");
  }
}

// Section of c + L B by {<x,a> = 1} in the ball coordinates: center q, radius r, Jacobian
// of the measure and the unit normal theta' of the section plane in ball coordinates.
struct DiscSection {
  Vec q;
  double r;
  double jac;
  Vec theta;
};

DiscSection disc_section(const Body& body, const Vec& a) {
  const Mat& l = body.half_axes();
  const Vec la = l * a;
  const double nla = la.norm();
  const Vec theta = la / nla;
  const double d = (1.0 - body.center().dot(a)) / nla;
  const double r = std::sqrt(std::max(0.0, 1.0 - d * d));
  return {d * theta, r, body.half_axes_det() * a.norm() / nla, theta};
}

Vec cap_first(const Body& body, const Vec& a, double* mass) {
  const double na = a.norm();
  const CapMoments cm =
      cap_moments(body, Weight::constant(1.0), Direction(a), 1.0 / na);
  if (mass != nullptr) {
    *mass = cm.mass;
  }
  return cm.first;
}

}  // namespace

bool hyperplane_meets_interior(const Body& body, const Vec& a) {
  if (!(a.norm() > 0.0) || !a.allFinite()) {
    return false;
  }
  return -body.support(Vec(-a)) < 1.0 && 1.0 < body.support(a);
}

geom::Moments section_moments(const Body& body, const Vec& a) {
  require_meets(body, a);
  const int n = body.dim();
  if (body.kind() == BodyKind::Polytope) {
    const double na = a.norm();
    return body.cell().section(a / na, 1.0 / na);
  }
  const DiscSection s = disc_section(body, a);
  const Mat& l = body.half_axes();
  const Vec& c = body.center();
  const double vol = unit_ball_volume(n - 1) * std::pow(s.r, n - 1);
  const Mat p = Mat::Identity(n, n) - s.theta * s.theta.transpose();
  const Vec mu1 = vol * s.q;
  const Mat mu2 = vol * (s.q * s.q.transpose() + s.r * s.r / (n + 1.0) * p);
  geom::Moments m;
  m.m0 = s.jac * vol;
  const Vec lm1 = l * mu1;
  m.m1 = s.jac * (vol * c + lm1);
  m.m2 = s.jac * (vol * c * c.transpose() + c * lm1.transpose() + lm1 * c.transpose() +
                  l * mu2 * l.transpose());
  return m;
}

double cap_delta(const Body& body, const Vec& a) {
  require_meets(body, a);
  return cap_mass(body, Weight::constant(1.0), Direction(a), 1.0 / a.norm());
}

Vec cap_U(const Body& body, const Vec& a) {
  require_meets(body, a);
  return cap_first(body, a, nullptr);
}

Vec grad_delta(const Body& body, const Vec& a) {
  return section_moments(body, a).m1 / a.norm();
}

Mat jac_U(const Body& body, const Vec& a) {
  return section_moments(body, a).m2 / a.norm();
}

double section_norm2_quadrature(const Body& body, const Vec& a) {
  require_meets(body, a);
  const int n = body.dim();
  if (body.kind() != BodyKind::Polytope) {
    const DiscSection s = disc_section(body, a);
    const Mat e = orthonormal_complement(Direction(s.theta));
    const Mat& l = body.half_axes();
    const Vec& c = body.center();
    const int k = n - 1;
    const auto& gl = quad::gauss_legendre(24);
    const auto sphere = sphere_quadrature(k, 24);
    double sum = 0.0;
    for (std::size_t i = 0; i < gl.nodes.size(); ++i) {
      const double rad = 0.5 * (gl.nodes[i] + 1.0);
      const double wr = 0.5 * gl.weights[i] * std::pow(rad, k - 1);
      for (const auto& node : sphere) {
        const Vec y = s.q + s.r * rad * (e * node.u);
        const Vec x = c + l * y;
        sum += wr * node.weight * x.squaredNorm();
      }
    }
    return sum * s.jac * std::pow(s.r, k);
  }
  const double na = a.norm();
  const Vec theta = a / na;
  const double d = 1.0 / na;
  const double tol = 1e-13 * body.diameter();
  std::vector<Vec> pts;
  const auto& verts = body.vertices();
  for (const auto& v : verts) {
    if (std::abs(v.dot(theta) - d) <= tol) {
      pts.push_back(v);
    }
  }
  auto add_edge = [&](int i, int j) {
    const double si = verts[i].dot(theta) - d;
    const double sj = verts[j].dot(theta) - d;
    if ((si > tol && sj < -tol) || (si < -tol && sj > tol)) {
      const double t = si / (si - sj);
      pts.push_back(verts[i] + t * (verts[j] - verts[i]));
    }
  };
  for (const auto& f : body.facets()) {
    const std::size_t len = f.loop.size();
    if (n == 2) {
      add_edge(f.loop[0], f.loop[1]);
    } else {
      for (std::size_t i = 0; i < len; ++i) {
        // Each edge is shared by two facets; count it once.
        const int p = f.loop[i];
        const int q = f.loop[(i + 1) % len];
        if (p < q) {
          add_edge(p, q);
        }
      }
    }
  }
  if (n == 2) {
    if (pts.size() < 2) {
      return 0.0;
    }
    Vec p0 = pts[0];
    Vec p1 = pts[0];
    for (const auto& p : pts) {
      if ((p - p0).norm() > (p1 - p0).norm()) {
        p1 = p;
      }
    }
    const auto& gl = quad::gauss_legendre(4);
    const double len = (p1 - p0).norm();
    double sum = 0.0;
    for (std::size_t i = 0; i < gl.nodes.size(); ++i) {
      const double t = 0.5 * (gl.nodes[i] + 1.0);
      sum += 0.5 * gl.weights[i] * (p0 + t * (p1 - p0)).squaredNorm();
    }
    return sum * len;
  }
  const Mat e = orthonormal_complement(Direction(theta));
  std::vector<Vec> planar;
  for (const auto& p : pts) {
    planar.push_back(e.transpose() * p);
  }
  const auto loop = geom::hull2d(planar);
  if (loop.size() < 3) {
    return 0.0;
  }
  const auto& rule = quad::simplex_rule(2, 4);
  double sum = 0.0;
  const Vec base = d * theta;
  auto lift = [&](const Vec& y) -> Vec { return base + e * y; };
  for (std::size_t i = 1; i + 1 < loop.size(); ++i) {
    const Vec& y0 = loop[0];
    const Vec& y1 = loop[i];
    const Vec& y2 = loop[i + 1];
    const double area = 0.5 * std::abs(cross2(y1 - y0, y2 - y0));
    for (std::size_t j = 0; j < rule.weights.size(); ++j) {
      const Vec& b = rule.barycentric[j];
      const Vec y = b[0] * y0 + b[1] * y1 + b[2] * y2;
      sum += area * rule.weights[j] * lift(y).squaredNorm();
    }
  }
  return sum;
}

FdReport fd_check(const Body& body, const Vec& a, double rel_step) {
  require_meets(body, a);
  const int n = body.dim();
  const double h = rel_step * a.norm();
  const Vec g = grad_delta(body, a);
  const Mat du = jac_U(body, a);
  Vec g_fd(n);
  Mat du_fd(n, n);
  for (int j = 0; j < n; ++j) {
    Vec ap = a;
    Vec am = a;
    ap[j] += h;
    am[j] -= h;
    double mp = 0.0;
    double mm = 0.0;
    const Vec up = cap_first(body, ap, &mp);
    const Vec um = cap_first(body, am, &mm);
    g_fd[j] = (mp - mm) / (2.0 * h);
    du_fd.col(j) = (up - um) / (2.0 * h);
  }
  FdReport r;
  r.a = a;
  r.grad_deviation = (g_fd - g).cwiseAbs().maxCoeff();
  r.jac_deviation = (du_fd - du).cwiseAbs().maxCoeff();
  r.grad_tolerance = std::max(1e-6, 1e-3 * g.norm());
  r.jac_tolerance = std::max(1e-6, 1e-3 * du.norm());
  const double direct = section_norm2_quadrature(body, a) / a.norm();
  r.trace_deviation = std::abs(du.trace() - direct);
  r.trace_tolerance = 1e-10 * std::max(1.0, std::abs(direct));
  r.passed = r.grad_deviation <= r.grad_tolerance && r.jac_deviation <= r.jac_tolerance &&
             r.trace_deviation <= r.trace_tolerance;
  return r;
}

std::vector<Vec> random_cap_vectors(const Body& body, int count, std::uint64_t seed) {
  const int n = body.dim();
  Rng rng(stream_seed(seed, 0));
  const double diam = body.diameter();
  std::vector<Vec> out;
  int attempts = 0;
  while (static_cast<int>(out.size()) < count) {
    if (++attempts > 1000 * std::max(count, 1)) {
      throw NumericalError("could not sample cap vectors: no hyperplane <x,a> = 1 meets K");
    }
    const Direction theta = rng.direction(n);
    const double hi = body.support(theta);
    const double lo = -body.support(-theta);
    const double margin = 0.05 * (hi - lo);
    const double a_lo = std::max(lo, 0.0) + margin;
    const double a_hi = hi - margin;
    if (!(a_hi > a_lo)) {
      continue;
    }
    const double d = rng.uniform(a_lo, a_hi);
    if (body.kind() == BodyKind::Polytope) {
      bool near = false;
      for (const auto& v : body.vertices()) {
        if (std::abs(v.dot(theta.vec()) - d) < 1e-3 * diam) {
          near = true;
          break;
        }
      }
      if (near) {
        continue;
      }
    }
    out.push_back(theta.vec() / d);
  }
  return out;
}

GradCheckSummary grad_check(const Body& body, int samples, std::uint64_t seed) {
  GradCheckSummary s;
  for (const Vec& a : random_cap_vectors(body, samples, seed)) {
    FdReport r = fd_check(body, a);
    ++s.samples;
    if (!r.passed) {
      ++s.failures;
    }
    s.max_grad_deviation = std::max(s.max_grad_deviation, r.grad_deviation);
    s.max_jac_deviation = std::max(s.max_jac_deviation, r.jac_deviation);
    s.max_trace_deviation = std::max(s.max_trace_deviation, r.trace_deviation);
    s.reports.push_back(std::move(r));
  }
  return s;
}

Vec barycenter_via_U(const Body& body, const Direction& theta, double delta) {
  const Weight one = Weight::constant(1.0);
  const double d = cut_height(body, one, theta, delta);
  if (d > 0.0 && d < body.support(theta)) {
    const Vec a = theta.vec() / d;
    return cap_U(body, a) / cap_delta(body, a);
  }
  double shift = 2.0 * body.diameter();
  if (d + shift <= 0.0) {
    shift = 2.0 * body.diameter() - d;
  }
  const Vec v = shift * theta.vec();
  const Body moved = body.translated(v);
  const Vec a = theta.vec() / (d + shift);
  return cap_U(moved, a) / cap_delta(moved, a) - v;
}

}  // namespace ulamfloat
