#include "ulamfloat/checks.hpp"

#include "ulamfloat/centroid.hpp"
#include "ulamfloat/parallel.hpp"
#include "ulamfloat/sphere.hpp"

#include <limits>

namespace ulamfloat {

namespace {

void require_volume_one_centered(const Body& body, const char* what) {
  if (std::abs(body.volume() - 1.0) > 1e-9) {
    throw InvalidInput(std::string(what) + " needs a body of volume 1");
  }
  if (body.barycenter().norm() > 1e-9 * body.diameter()) {
    throw InvalidInput(std::string(what) + " needs the barycenter at the origin");
  }
}

}  // namespace

SandwichReport sandwich_check(const Body& body, const Weight& w, double delta, int m,
                              const ApproxOptions& opts, double tol) {
  if (!w.is_log_concave()) {
    throw InvalidInput("the sandwich inclusions are stated for log-concave weights only");
  }
  const int n = body.dim();
  const auto grid = direction_grid(n, m);
  std::vector<double> h_m(m);
  std::vector<Vec> x_m(m);
  std::vector<double> d_left(m);
  std::vector<double> d_right(m);
  const double e = std::exp(1.0);
  parallel_for(
      m,
      [&](int i) {
        const auto s = ulam_support(body, w, grid[i], delta, opts.caps);
        h_m[i] = s.h;
        x_m[i] = s.x;
        d_left[i] = cut_height(body, w, grid[i], (1.0 - 1.0 / e) * delta, opts.caps);
        d_right[i] = cut_height(body, w, grid[i], delta / e, opts.caps);
      },
      opts.threads);
  SandwichReport r;
  r.m = m;
  r.delta = delta;
  r.tolerance = tol;
  r.left_margin = std::numeric_limits<double>::infinity();
  r.right_margin = std::numeric_limits<double>::infinity();
  for (int i = 0; i < m; ++i) {
    const double margin = h_m[i] - d_left[i];
    if (margin < r.left_margin) {
      r.left_margin = margin;
      r.left_witness = i;
    }
    for (int j = 0; j < m; ++j) {
      const double mr = d_right[j] - grid[j].dot(x_m[i]);
      if (mr < r.right_margin) {
        r.right_margin = mr;
        r.right_witness = {i, j};
      }
    }
  }
  r.passed = r.left_margin >= -tol && r.right_margin >= -tol;
  return r;
}

ZpSandwichReport zp_sandwich_check(const Body& body, double delta, int m,
                                   const ApproxOptions& opts, double tol) {
  require_volume_one_centered(body, "zp_sandwich_check");
  if (!(delta > 0.0 && delta < std::exp(-1.0))) {
    throw InvalidInput("zp_sandwich_check needs 0 < delta < 1/e");
  }
  const int n = body.dim();
  const auto grid = direction_grid(n, m);
  for (int i = 0; i < m / 2; ++i) {
    if (std::abs(body.support(grid[i]) - body.support(grid[i + m / 2])) >
        1e-9 * body.diameter()) {
      throw InvalidInput("zp_sandwich_check needs a centrally symmetric body");
    }
  }
  const Weight one = Weight::constant(1.0);
  const double p = std::log(1.0 / delta);
  const BodyApproximation kd = build_floating_body(body, one, delta, m, opts);
  if (kd.empty) {
    throw NumericalError("convex floating body is empty: " + kd.diagnostic);
  }
  std::vector<double> h_m(m);
  std::vector<double> h_z(m);
  parallel_for(
      m,
      [&](int i) {
        h_m[i] = ulam_support(body, one, grid[i], delta, opts.caps).h;
        h_z[i] = zp_support(body, p, grid[i]).h;
      },
      opts.threads);
  ZpSandwichReport r;
  r.m = m;
  r.delta = delta;
  r.p = p;
  r.tolerance = tol;
  r.left_margin = std::numeric_limits<double>::infinity();
  r.right_margin = std::numeric_limits<double>::infinity();
  const double e = std::exp(1.0);
  for (int i = 0; i < m; ++i) {
    const double h_kd =
        kd.has_cells ? floating_support(kd, grid[i].vec()) : kd.support_values[i];
    const double left = h_m[i] - h_kd;
    const double right = e * h_z[i] - h_m[i];
    if (left < r.left_margin) {
      r.left_margin = left;
      r.left_witness = i;
    }
    if (right < r.right_margin) {
      r.right_margin = right;
      r.right_witness = i;
    }
  }
  r.passed = r.left_margin >= -tol && r.right_margin >= -tol;
  return r;
}

SymmetryReport symmetry_check(const Body& body, double delta, int m, const ApproxOptions& opts,
                              double tol, double archimedes_tol) {
  require_volume_one_centered(body, "symmetry_check");
  if (!(delta > 0.0 && delta < 1.0)) {
    throw InvalidInput("symmetry_check needs 0 < delta < 1");
  }
  const int n = body.dim();
  const Weight one = Weight::constant(1.0);
  const auto grid = direction_grid(n, m);
  std::vector<double> h_far(m);
  std::vector<double> h_near(m);
  std::vector<double> h_half(m);
  parallel_for(
      m,
      [&](int i) {
        h_far[i] = ulam_support(body, one, grid[i], 1.0 - delta, opts.caps).h;
        h_near[i] = ulam_support(body, one, -grid[i], delta, opts.caps).h;
        h_half[i] = ulam_support(body, one, grid[i], 0.5, opts.caps).h;
      },
      opts.threads);
  SymmetryReport r;
  r.m = m;
  r.delta = delta;
  r.tolerance = tol;
  r.archimedes_tolerance = archimedes_tol;
  const double ratio = delta / (1.0 - delta);
  for (int i = 0; i < m; ++i) {
    const double dev = std::abs(h_far[i] - ratio * h_near[i]);
    if (dev > r.identity_deviation) {
      r.identity_deviation = dev;
      r.witness = i;
    }
    const int j = (i + m / 2) % m;
    r.central_deviation = std::max(r.central_deviation, std::abs(h_half[i] - h_half[j]));
  }
  const auto dirs = direction_grid(n, 64);
  std::vector<double> arch(dirs.size());
  parallel_for(
      static_cast<int>(dirs.size()),
      [&](int i) {
        const Vec a = ulam_support(body, one, dirs[i], delta, opts.caps).x;
        const Vec b = ulam_support(body, one, -dirs[i], 1.0 - delta, opts.caps).x;
        arch[i] = (delta * a + (1.0 - delta) * b).norm();
      },
      opts.threads);
  for (double a : arch) {
    r.archimedes_deviation = std::max(r.archimedes_deviation, a);
  }
  r.passed = r.identity_deviation <= tol && r.central_deviation <= tol &&
             r.archimedes_deviation <= archimedes_tol;
  return r;
}

}  // namespace ulamfloat
