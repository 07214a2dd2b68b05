#include "ulamfloat/caps.hpp"

#include "ulamfloat/quadrature.hpp"
#include "ulamfloat/random.hpp"
#include "ulamfloat/sphere.hpp"

#include <boost/math/special_functions/beta.hpp>
#include <boost/math/tools/roots.hpp>

#include <algorithm>
#include <cstring>
#include <limits>

namespace ulamfloat {

namespace {

std::uint64_t hash_doubles(const Vec& v, double d) {
  std::uint64_t h = 0x51ed270b27a1c3d5ULL;
  auto mix = [&](double x) {
    std::uint64_t bits = 0;
    std::memcpy(&bits, &x, sizeof(bits));
    h = splitmix64(h ^ bits);
  };
  for (int i = 0; i < v.size(); ++i) {
    mix(v[i]);
  }
  mix(d);
  return h;
}

struct Frame {
  Vec theta;
  double width;    // |L theta|
  Vec theta_u;     // L theta / |L theta|
  double offset;   // <c, theta>
};

Frame ellipsoid_frame(const Body& body, const Vec& theta) {
  const Vec lt = body.half_axes() * theta;
  const double w = lt.norm();
  return {theta, w, lt / w, body.center().dot(theta)};
}

CapMoments analytic_moments(const Body& body, double s, const Vec& theta, double d) {
  const int n = body.dim();
  const Frame f = ellipsoid_frame(body, theta);
  const double t = std::clamp((d - f.offset) / f.width, -1.0, 1.0);
  const double v = unit_cap_volume(n, t);
  const double m = unit_cap_moment(n, t);
  const double scale = s * body.half_axes_det();
  CapMoments out;
  out.mass = scale * v;
  out.first = scale * (body.center() * v + body.half_axes() * f.theta_u * m);
  out.error = 1e-15 * (out.mass + out.first.norm());
  out.backend = CapBackend::Analytic;
  return out;
}

CapMoments cell_cubature(const geom::ConvexCell& cell, const Weight& w, int order, bool estimate) {
  const int n = cell.dim();
  auto integrate = [&](int q) {
    const auto& rule = quad::simplex_rule(n, q);
    double mass = 0.0;
    Vec first = Vec::Zero(n);
    cell.for_each_simplex([&](const std::vector<Vec>& v, double vol) {
      double ms = 0.0;
      Vec fs = Vec::Zero(n);
      for (std::size_t k = 0; k < rule.weights.size(); ++k) {
        const Vec& b = rule.barycentric[k];
        Vec x = b[0] * v[0];
        for (int j = 1; j <= n; ++j) {
          x += b[j] * v[j];
        }
        const double f = rule.weights[k] * w(x);
        ms += f;
        fs += f * x;
      }
      mass += vol * ms;
      first += vol * fs;
    });
    return std::pair<double, Vec>{mass, first};
  };
  CapMoments out;
  auto [mass, first] = integrate(order);
  out.mass = mass;
  out.first = first;
  out.backend = CapBackend::ClipCubature;
  if (estimate) {
    auto [m2, f2] = integrate(std::max(2, order - 2));
    out.error = std::max(std::abs(mass - m2), (first - f2).cwiseAbs().maxCoeff());
  } else {
    out.error = 0.0;
  }
  return out;
}

CapMoments slice_moments(const Body& body, const Weight& w, const Vec& theta, double d,
                         const CapOptions& opts) {
  const int n = body.dim();
  const Frame f = ellipsoid_frame(body, theta);
  const double t = std::clamp((d - f.offset) / f.width, -1.0, 1.0);
  const double psi_max = std::acos(t);
  const Mat basis = orthonormal_complement(Direction(f.theta_u));
  const auto omega = sphere_quadrature(n - 1, opts.sphere_resolution);
  const quad::Rule radial = quad::gauss_legendre(opts.radial_nodes, 0.0, 1.0);
  const Mat& l = body.half_axes();
  const Vec& c = body.center();

  std::vector<Vec> dirs;
  dirs.reserve(omega.size());
  for (const auto& node : omega) {
    dirs.push_back(basis * node.u);
  }
  auto integrand = [&](double psi) {
    const double ct = std::cos(psi);
    const double st = std::sin(psi);
    Vec acc = Vec::Zero(n + 1);
    const Vec axis = ct * f.theta_u;
    for (std::size_t i = 0; i < radial.nodes.size(); ++i) {
      const double r = radial.nodes[i];
      const double wr = radial.weights[i] * std::pow(r, n - 2);
      for (std::size_t k = 0; k < dirs.size(); ++k) {
        const Vec u = axis + st * r * dirs[k];
        const Vec x = c + l * u;
        const double fx = wr * omega[k].weight * w(x);
        acc[0] += fx;
        acc.tail(n) += fx * x;
      }
    }
    return Vec(acc * std::pow(st, n));
  };
  const auto res = quad::integrate_adaptive(integrand, 0.0, psi_max, opts.rel_tol);
  const double scale = body.half_axes_det();
  CapMoments out;
  out.mass = scale * res.value[0];
  out.first = scale * res.value.tail(n);
  out.error = scale * res.error;
  out.backend = CapBackend::SliceQuadrature;
  return out;
}

// Bounding box of the body in the frame (theta, E).
struct SlabFrame {
  Mat basis;
  Vec lo;
  Vec hi;
};

SlabFrame slab_frame(const Body& body, const Vec& theta) {
  const int n = body.dim();
  SlabFrame s;
  s.basis = orthonormal_complement(Direction(theta));
  s.lo.resize(n - 1);
  s.hi.resize(n - 1);
  for (int j = 0; j < n - 1; ++j) {
    const Vec e = s.basis.col(j);
    s.lo[j] = -body.support(Vec(-e));
    s.hi[j] = body.support(e);
  }
  return s;
}

CapMoments mc_moments(const Body& body, const Weight& w, const Vec& theta, double d,
                      const CapOptions& opts) {
  const int n = body.dim();
  const double top = body.support(theta);
  CapMoments out;
  out.first = Vec::Zero(n);
  out.backend = CapBackend::MonteCarlo;
  if (!(top > d)) {
    return out;
  }
  const SlabFrame frame = slab_frame(body, theta);
  const double cross_vol = (frame.hi - frame.lo).prod();
  constexpr int kStrata = 16;
  const std::int64_t per = std::max<std::int64_t>(16, opts.mc_samples / kStrata);
  Rng rng(stream_seed(opts.seed, hash_doubles(theta, d)));
  double var = 0.0;
  for (int s = 0; s < kStrata; ++s) {
    const double t0 = d + (top - d) * s / kStrata;
    const double t1 = d + (top - d) * (s + 1) / kStrata;
    const double vol = cross_vol * (t1 - t0);
    double sum = 0.0;
    double sum2 = 0.0;
    Vec first = Vec::Zero(n);
    for (std::int64_t i = 0; i < per; ++i) {
      Vec x = rng.uniform(t0, t1) * theta;
      for (int j = 0; j < n - 1; ++j) {
        x += rng.uniform(frame.lo[j], frame.hi[j]) * frame.basis.col(j);
      }
      if (!body.contains(x)) {
        continue;
      }
      const double f = w(x);
      sum += f;
      sum2 += f * f;
      first += f * x;
    }
    const double mean = sum / per;
    out.mass += vol * mean;
    out.first += vol / per * first;
    var += vol * vol * std::max(0.0, sum2 / per - mean * mean) / per;
  }
  out.error = std::sqrt(var);
  return out;
}

void check_height(const Body& body, const Vec& theta, double& d) {
  const double hi = body.support(theta);
  const double lo = -body.support(Vec(-theta));
  const double tol = 1e-12 * body.diameter();
  if (!std::isfinite(d) || d < lo - tol || d > hi + tol) {
    throw InvalidInput("cut height lies outside the support range of the body");
  }
  d = std::clamp(d, lo, hi);
}

// Uniform samples of the body with their weights, for the sampled cut solver.
struct WeightedSample {
  double height;
  double weight;
  Vec x;
};

}  // namespace

std::string to_string(CapBackend backend) {
  switch (backend) {
    case CapBackend::Auto:
      return "auto";
    case CapBackend::Analytic:
      return "analytic";
    case CapBackend::ExactClip:
      return "exact-clip";
    case CapBackend::ClipCubature:
      return "clip-cubature";
    case CapBackend::SliceQuadrature:
      return "slice-quadrature";
    case CapBackend::MonteCarlo:
      return "monte-carlo";
  }
  return "unknown";
}

CapBackend backend_from_string(const std::string& name) {
  if (name == "mc") {
    return CapBackend::MonteCarlo;
  }
  for (auto b : {CapBackend::Auto, CapBackend::Analytic, CapBackend::ExactClip,
                 CapBackend::ClipCubature, CapBackend::SliceQuadrature, CapBackend::MonteCarlo}) {
    if (to_string(b) == name) {
      return b;
    }
  }
  throw InvalidInput("unknown cap backend '" + name + "'");
}

double unit_cap_volume(int n, double t) {
  t = std::clamp(t, -1.0, 1.0);
  const double omega = unit_ball_volume(n);
  const double x = (1.0 - t) * (1.0 + t);
  const double half = x > 0.0 ? 0.5 * omega * boost::math::ibeta(0.5 * (n + 1), 0.5, x) : 0.0;
  return t >= 0.0 ? half : omega - half;
}

double unit_cap_moment(int n, double t) {
  t = std::clamp(t, -1.0, 1.0);
  const double x = (1.0 - t) * (1.0 + t);
  return unit_ball_volume(n - 1) * std::pow(x, 0.5 * (n + 1)) / (n + 1);
}

CapBackend resolve_backend(const Body& body, const Weight& w, const CapOptions& opts) {
  if (w.dim() != 0 && w.dim() != body.dim()) {
    throw InvalidInput("weight dimension does not match the body");
  }
  const bool constant = opts.detect_constant && w.constant_value().has_value();
  const bool poly = body.kind() == BodyKind::Polytope;
  switch (opts.backend) {
    case CapBackend::Auto:
      if (poly) {
        return constant ? CapBackend::ExactClip : CapBackend::ClipCubature;
      }
      return constant ? CapBackend::Analytic : CapBackend::SliceQuadrature;
    case CapBackend::Analytic:
      if (poly || !w.constant_value()) {
        throw InvalidInput("analytic caps need a ball or ellipsoid with constant weight");
      }
      return CapBackend::Analytic;
    case CapBackend::ExactClip:
      if (!poly || !w.constant_value()) {
        throw InvalidInput("exact clipping needs a polytope with constant weight");
      }
      return CapBackend::ExactClip;
    case CapBackend::ClipCubature:
      if (!poly) {
        throw InvalidInput("clip cubature needs a polytope");
      }
      return CapBackend::ClipCubature;
    case CapBackend::SliceQuadrature:
      if (poly) {
        throw InvalidInput("slice quadrature is implemented for balls and ellipsoids");
      }
      return CapBackend::SliceQuadrature;
    case CapBackend::MonteCarlo:
      return CapBackend::MonteCarlo;
  }
  return CapBackend::Auto;
}

CapMoments cap_moments(const Body& body, const Weight& w, const Direction& theta, double d,
                       const CapOptions& opts) {
  if (theta.dim() != body.dim()) {
    throw InvalidInput("direction dimension does not match the body");
  }
  check_height(body, theta.vec(), d);
  const CapBackend backend = resolve_backend(body, w, opts);
  switch (backend) {
    case CapBackend::Analytic:
      return analytic_moments(body, *w.constant_value(), theta.vec(), d);
    case CapBackend::ExactClip: {
      const auto cell = body.cell().clip(-theta.vec(), -d);
      const auto mom = cell.moments();
      const double s = *w.constant_value();
      CapMoments out;
      out.mass = s * mom.m0;
      out.first = s * mom.m1;
      out.error = 1e-14 * (body.volume() * s);
      out.backend = CapBackend::ExactClip;
      return out;
    }
    case CapBackend::ClipCubature:
      return cell_cubature(body.cell().clip(-theta.vec(), -d), w, opts.simplex_order,
                           opts.estimate_error);
    case CapBackend::SliceQuadrature:
      return slice_moments(body, w, theta.vec(), d, opts);
    case CapBackend::MonteCarlo:
      return mc_moments(body, w, theta.vec(), d, opts);
    case CapBackend::Auto:
      break;
  }
  throw NumericalError("no cap backend selected");
}

double cap_mass(const Body& body, const Weight& w, const Direction& theta, double d,
                const CapOptions& opts) {
  return cap_moments(body, w, theta, d, opts).mass;
}

Vec cap_barycenter(const Body& body, const Weight& w, const Direction& theta, double d,
                   const CapOptions& opts) {
  const auto m = cap_moments(body, w, theta, d, opts);
  if (!(m.mass > 0.0)) {
    throw InvalidInput("cap has zero mass; its barycenter is undefined");
  }
  return m.first / m.mass;
}

double cap_first_moment(const Body& body, const Weight& w, const Direction& theta, double d,
                        const CapOptions& opts) {
  return theta.dot(cap_moments(body, w, theta, d, opts).first);
}

namespace {

std::vector<WeightedSample> body_samples(const Body& body, const Weight& w, const Vec& theta,
                                         const CapOptions& opts, double& total) {
  const int n = body.dim();
  Vec lo(n);
  Vec hi(n);
  for (int j = 0; j < n; ++j) {
    const Vec e = Vec::Unit(n, j);
    lo[j] = -body.support(Vec(-e));
    hi[j] = body.support(e);
  }
  const double box = (hi - lo).prod();
  Rng rng(stream_seed(opts.seed, hash_doubles(theta, -1.0)));
  std::vector<WeightedSample> samples;
  double sum = 0.0;
  for (std::int64_t i = 0; i < opts.mc_samples; ++i) {
    Vec x(n);
    for (int j = 0; j < n; ++j) {
      x[j] = rng.uniform(lo[j], hi[j]);
    }
    if (!body.contains(x)) {
      continue;
    }
    const double f = w(x) * box / static_cast<double>(opts.mc_samples);
    sum += f;
    samples.push_back({x.dot(theta), f, std::move(x)});
  }
  total = sum;
  std::sort(samples.begin(), samples.end(),
            [](const WeightedSample& a, const WeightedSample& b) { return a.height > b.height; });
  return samples;
}

CapCut mc_cut(const Body& body, const Weight& w, const Direction& theta, double delta,
              const CapOptions& opts) {
  double total = 0.0;
  const auto samples = body_samples(body, w, theta.vec(), opts, total);
  if (samples.empty()) {
    throw NumericalError("sampling produced no points inside the body");
  }
  const double target = std::min(delta, total);
  double acc = 0.0;
  Vec first = Vec::Zero(body.dim());
  double d = samples.back().height;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    acc += samples[i].weight;
    first += samples[i].weight * samples[i].x;
    if (acc >= target) {
      d = i + 1 < samples.size() ? 0.5 * (samples[i].height + samples[i + 1].height)
                                 : samples[i].height;
      break;
    }
  }
  const double n_eff = std::max(1.0, acc / samples.front().weight);
  CapCut cut{theta, d, acc, first / acc, CapBackend::MonteCarlo, acc / std::sqrt(n_eff)};
  return cut;
}

}  // namespace

double cut_height(const Body& body, const Weight& w, const Direction& theta, double delta,
                  const CapOptions& opts) {
  const CapBackend backend = resolve_backend(body, w, opts);
  const double hi = body.support(theta);
  const double lo = -body.support(-theta);
  if (!(delta >= 0.0) || !std::isfinite(delta)) {
    throw InvalidInput("cap mass delta must be non-negative and finite");
  }
  if (delta == 0.0) {
    return hi;
  }
  if (backend == CapBackend::MonteCarlo) {
    return mc_cut(body, w, theta, delta, opts).d;
  }
  if (backend == CapBackend::Analytic) {
    const int n = body.dim();
    const double s = *w.constant_value();
    const Frame f = ellipsoid_frame(body, theta.vec());
    const double omega = unit_ball_volume(n);
    const double target = delta / (s * body.half_axes_det());
    if (target > omega * (1.0 + 1e-14)) {
      throw InvalidInput("cap mass delta exceeds the total mass of the body");
    }
    if (target >= omega) {
      return lo;
    }
    double t;
    if (target <= 0.5 * omega) {
      const double x = boost::math::ibeta_inv(0.5 * (n + 1), 0.5, 2.0 * target / omega);
      t = std::sqrt(1.0 - x);
    } else {
      const double x = boost::math::ibeta_inv(0.5 * (n + 1), 0.5, 2.0 * (omega - target) / omega);
      t = -std::sqrt(1.0 - x);
    }
    return f.offset + f.width * t;
  }

  CapOptions inner = opts;
  inner.estimate_error = false;
  auto mass = [&](double d) { return cap_moments(body, w, theta, d, inner).mass; };
  const double total = mass(lo);
  const double rel = 1e-14 * total;
  if (delta > total + rel) {
    throw InvalidInput("cap mass delta exceeds the total mass of the body");
  }
  if (delta >= total) {
    return lo;
  }
  const double width_tol = 1e-12 * body.diameter();
  auto f = [&](double d) { return mass(d) - delta; };
  std::uintmax_t max_iter = 200;
  auto tol = [&](double a, double b) { return std::abs(b - a) <= width_tol; };
  auto [a, b] = boost::math::tools::toms748_solve(f, lo, hi, total - delta, -delta, tol, max_iter);
  double d = 0.5 * (a + b);
  double fd = f(d);
  const double accept = 1e-10 * total;
  // Finish with bisection when the residual is still too large.
  double fa = f(a);
  for (int it = 0; it < 200 && std::abs(fd) > accept && b - a > 1e-16 * body.diameter(); ++it) {
    if ((fd > 0.0) == (fa > 0.0)) {
      a = d;
      fa = fd;
    } else {
      b = d;
    }
    d = 0.5 * (a + b);
    fd = f(d);
  }
  if (std::abs(fd) > accept) {
    throw NumericalError("cut height solver did not reach the mass tolerance");
  }
  return d;
}

CapCut cap_cut(const Body& body, const Weight& w, const Direction& theta, double delta,
               const CapOptions& opts) {
  const CapBackend backend = resolve_backend(body, w, opts);
  if (backend == CapBackend::MonteCarlo) {
    return mc_cut(body, w, theta, delta, opts);
  }
  const double d = cut_height(body, w, theta, delta, opts);
  const auto m = cap_moments(body, w, theta, d, opts);
  if (!(m.mass > 0.0)) {
    throw InvalidInput("cap has zero mass; its barycenter is undefined");
  }
  return CapCut{theta, d, m.mass, m.first / m.mass, m.backend, m.error};
}

MassEstimate total_mass(const Weight& w, const Body& body, const CapOptions& opts) {
  const CapBackend backend = resolve_backend(body, w, opts);
  switch (backend) {
    case CapBackend::Analytic:
    case CapBackend::ExactClip:
      return {*w.constant_value() * body.volume(), 1e-15 * body.volume()};
    case CapBackend::ClipCubature: {
      const auto m = cell_cubature(body.cell(), w, opts.simplex_order, true);
      return {m.mass, m.error};
    }
    case CapBackend::SliceQuadrature:
    case CapBackend::MonteCarlo: {
      const Direction e = Direction::axis(body.dim(), 0);
      const auto m = cap_moments(body, w, e, -body.support(-e), opts);
      return {m.mass, m.error};
    }
    case CapBackend::Auto:
      break;
  }
  throw NumericalError("no backend for total mass");
}

CapMoments region_moments(const Body& body, const Weight& w, const std::vector<Halfspace>& hs,
                          const CapOptions& opts) {
  const int n = body.dim();
  const CapBackend backend = resolve_backend(body, w, opts);
  if (body.kind() == BodyKind::Polytope && backend != CapBackend::MonteCarlo) {
    geom::ConvexCell cell = body.cell();
    for (const auto& h : hs) {
      cell = cell.clip(-h.a, -h.b);
    }
    if (backend == CapBackend::ExactClip) {
      const auto mom = cell.moments();
      const double s = *w.constant_value();
      CapMoments out;
      out.mass = s * mom.m0;
      out.first = mom.m0 > 0.0 ? Vec(s * mom.m1) : Vec::Zero(n);
      out.error = 1e-14 * s * body.volume();
      out.backend = backend;
      return out;
    }
    return cell_cubature(cell, w, opts.simplex_order, opts.estimate_error);
  }
  // Sampled: uniform points in the bounding box, stream keyed by the halfspaces.
  Vec lo(n);
  Vec hi(n);
  for (int j = 0; j < n; ++j) {
    const Vec e = Vec::Unit(n, j);
    lo[j] = -body.support(Vec(-e));
    hi[j] = body.support(e);
  }
  std::uint64_t key = 0x9e3779b9ULL;
  for (const auto& h : hs) {
    key = splitmix64(key ^ hash_doubles(h.a, h.b));
  }
  Rng rng(stream_seed(opts.seed, key));
  const double box = (hi - lo).prod();
  const std::int64_t count = opts.mc_samples;
  double sum = 0.0;
  double sum2 = 0.0;
  Vec first = Vec::Zero(n);
  for (std::int64_t i = 0; i < count; ++i) {
    Vec x(n);
    for (int j = 0; j < n; ++j) {
      x[j] = rng.uniform(lo[j], hi[j]);
    }
    if (!body.contains(x)) {
      continue;
    }
    bool inside = true;
    for (const auto& h : hs) {
      if (x.dot(h.a) < h.b) {
        inside = false;
        break;
      }
    }
    if (!inside) {
      continue;
    }
    const double f = w(x);
    sum += f;
    sum2 += f * f;
    first += f * x;
  }
  CapMoments out;
  const double mean = sum / count;
  out.mass = box * mean;
  out.first = box / count * first;
  out.error = box * std::sqrt(std::max(0.0, sum2 / count - mean * mean) / count);
  out.backend = CapBackend::MonteCarlo;
  return out;
}

}  // namespace ulamfloat
