#include "ulamfloat/asa.hpp"

#include "ulamfloat/quadrature.hpp"

#include <boost/math/tools/toms748_solve.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>

namespace ulamfloat {

namespace {

// Boundary integral of f(sample) with resolution doubling until the relative change is
// below rel_tol.
double converged_boundary_integral(const Body& body,
                                   const std::function<double(const BoundarySample&)>& f,
                                   double rel_tol) {
  const int n = body.dim();
  int res = n == 2 ? 32 : 8;
  const int max_res = n == 2 ? 16384 : (n == 3 ? 512 : 64);
  auto eval = [&](int r) {
    double sum = 0.0;
    for (const auto& s : body.boundary_quadrature(r).samples) {
      sum += s.weight * f(s);
    }
    return sum;
  };
  double prev = eval(res);
  while (res < max_res) {
    res *= 2;
    const double cur = eval(res);
    if (std::abs(cur - prev) <= rel_tol * std::abs(cur)) {
      return cur;
    }
    prev = cur;
  }
  throw NumericalError("boundary quadrature did not converge at resolution " +
                       std::to_string(res));
}

void require_smooth_star(const Body& body, const char* what) {
  if (body.kind() == BodyKind::Polytope) {
    throw InvalidInput(std::string(what) + " needs a smooth body (ball or ellipsoid)");
  }
  if (!body.origin_interior()) {
    throw InvalidInput(std::string(what) + " needs the origin in the interior of the body");
  }
}

// J(h, k) = int_0^1 v^k (2 - h v^2)^e dv.
double shrink_integral(double h, double k, double e) {
  return quad::integrate_adaptive_scalar(
      [&](double v) { return std::pow(v, k) * std::pow(std::max(0.0, 2.0 - h * v * v), e); },
      0.0, 1.0, 1e-14);
}

}  // namespace

double asa_p(const Body& body, double p, double rel_tol) {
  require_smooth_star(body, "asa_p");
  const int n = body.dim();
  if (p == -static_cast<double>(n)) {
    throw InvalidInput("as_p is undefined for p = -n");
  }
  double kexp;
  double hexp;
  if (std::isinf(p)) {
    kexp = 1.0;
    hexp = n;
  } else {
    kexp = p / (n + p);
    hexp = n * (p - 1.0) / (n + p);
  }
  return converged_boundary_integral(
      body,
      [&](const BoundarySample& s) {
        return std::pow(s.curvature, kexp) / std::pow(s.support_number, hexp);
      },
      rel_tol);
}

double asa_p_ball(int n, double rho, double p) {
  if (p == -static_cast<double>(n)) {
    throw InvalidInput("as_p is undefined for p = -n");
  }
  const double expo = std::isinf(p) ? -static_cast<double>(n) : n * (n - p) / (n + p);
  return unit_sphere_area(n) * std::pow(rho, expo);
}

double c_n_proposition(int n) {
  return 0.5 * (n + 1.0) / (n + 3.0) *
         std::pow((n + 1.0) / unit_ball_volume(n - 1), 2.0 / (n + 1.0));
}

double c_n_theorem(int n) {
  return 2.0 * (n + 1.0) / (n + 3.0) *
         std::pow(unit_ball_volume(n - 1) / (n + 1.0), 2.0 / (n + 1.0));
}

double ball_shrinkage(int n, double rho, double delta, double s) {
  if (n < 2) {
    throw InvalidInput("ball_shrinkage needs n >= 2");
  }
  if (!(rho > 0.0) || !(s > 0.0)) {
    throw InvalidInput("ball_shrinkage needs rho > 0 and s > 0");
  }
  const double target = delta / s / std::pow(rho, n);
  const double wn = unit_ball_volume(n);
  if (!(target > 0.0 && target < wn)) {
    throw InvalidInput("ball_shrinkage needs 0 < delta < s |rho B|");
  }
  const double e = 0.5 * (n - 1);
  const double wn1 = unit_ball_volume(n - 1);
  // Cap of height h measured from the top: mass = 2 |B^{n-1}| h^{1+e} J(h, 2e+1).
  auto log_mass = [&](double h) {
    return std::log(2.0 * wn1) + (1.0 + e) * std::log(h) + std::log(shrink_integral(h, 2 * e + 1, e));
  };
  const double log_target = std::log(target);
  auto f = [&](double h) { return h >= 2.0 ? std::log(wn) - log_target : log_mass(h) - log_target; };
  const double h0 = std::pow(target * (1.0 + e) / (wn1 * std::pow(2.0, e)), 1.0 / (1.0 + e));
  double lo = std::min(h0, 2.0);
  double hi = std::min(2.0, 2.0 * h0);
  double flo = f(lo);
  double fhi = f(hi);
  if (flo > 0.0) {
    lo = 0.0;
    flo = -std::numeric_limits<double>::infinity();
  }
  if (fhi < 0.0) {
    hi = 2.0;
    fhi = f(hi);
  }
  double h;
  if (flo == 0.0) {
    h = lo;
  } else if (fhi == 0.0) {
    h = hi;
  } else {
    std::uintmax_t iters = 200;
    if (lo == 0.0) {
      lo = 1e-300;
      flo = f(lo);
    }
    const auto r = boost::math::tools::toms748_solve(
        f, lo, hi, flo, fhi, boost::math::tools::eps_tolerance<double>(52), iters);
    h = 0.5 * (r.first + r.second);
  }
  const double unit = h * shrink_integral(h, 2 * e + 3, e) / shrink_integral(h, 2 * e + 1, e);
  return rho * unit;
}

double aitken(double r0, double r1, double r2) {
  const double d1 = r1 - r0;
  const double d2 = r2 - r1;
  const double den = d2 - d1;
  const double scale = std::max({std::abs(r0), std::abs(r1), std::abs(r2)});
  if (!(std::abs(den) > 1e-15 * scale)) {
    return r2;
  }
  const double a = r2 - d2 * d2 / den;
  return std::isfinite(a) ? a : r2;
}

ConstantResolution resolve_constant(int n, double tol) {
  ConstantResolution res;
  res.n = n;
  res.c_proposition = c_n_proposition(n);
  res.c_theorem = c_n_theorem(n);
  res.mismatch = res.c_theorem / res.c_proposition;
  const double expo = 2.0 / (n + 1.0);
  for (int k = 0; k < 6; ++k) {
    const double d = 1e-4 * std::pow(4.0, -k);
    res.deltas.push_back(d);
    res.ratios.push_back(ball_shrinkage(n, 1.0, d) / std::pow(d, expo));
  }
  const auto& r = res.ratios;
  res.limit = aitken(r[r.size() - 3], r[r.size() - 2], r[r.size() - 1]);
  res.proposition_matches = std::abs(res.limit / res.c_proposition - 1.0) <= tol;
  res.theorem_matches = std::abs(res.limit / res.c_theorem - 1.0) <= tol;
  if (res.proposition_matches && res.theorem_matches) {
    res.matched = "both";
    res.validated = res.limit;
  } else if (res.proposition_matches) {
    res.matched = "proposition";
    res.validated = res.c_proposition;
  } else if (res.theorem_matches) {
    res.matched = "theorem";
    res.validated = res.c_theorem;
  } else {
    res.matched = "none";
    res.validated = res.limit;
  }
  return res;
}

double validated_c_n(int n) {
  static std::mutex mu;
  static std::map<int, double> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) {
    return it->second;
  }
  const double c = resolve_constant(n).validated;
  cache[n] = c;
  return c;
}

double limit_reference(const Body& body, const Weight& w, double rel_tol) {
  if (body.kind() == BodyKind::Polytope) {
    return 0.0;
  }
  const int n = body.dim();
  const double integral = converged_boundary_integral(
      body,
      [&](const BoundarySample& s) {
        return std::pow(s.curvature, 1.0 / (n + 1.0)) * std::pow(w(s.x), -2.0 / (n + 1.0));
      },
      rel_tol);
  return validated_c_n(n) * integral;
}

namespace {

int auto_resolution(const Body& body, double delta_min) {
  const int n = body.dim();
  if (body.kind() != BodyKind::Polytope) {
    return n == 2 ? 256 : 48;
  }
  if (n == 2) {
    const int levels = static_cast<int>(std::ceil(std::log2(1.0 / delta_min))) + 8;
    return std::clamp(levels, 12, 48);
  }
  return 8;
}

}  // namespace

ExperimentRecord limit_experiment(const Body& body_in, const Weight& w_in,
                                  const LimitOptions& opts) {
  if (!body_in.origin_interior()) {
    const Vec shift = -body_in.interior_point();
    const Mat id = Mat::Identity(body_in.dim(), body_in.dim());
    return limit_experiment(body_in.translated(shift), w_in.pushed_forward(id, shift), opts);
  }
  const Body& body = body_in;
  const Weight& w = w_in;
  if (opts.steps < 1) {
    throw InvalidInput("limit experiment needs at least one step");
  }
  if (!(opts.delta0 > 0.0)) {
    throw InvalidInput("limit experiment needs delta0 > 0");
  }
  const int n = body.dim();
  ExperimentRecord rec;
  rec.dim = n;
  rec.m = opts.m;
  rec.weight_id = w.id();
  const double delta_min = opts.delta0 * std::pow(4.0, -(opts.steps - 1));
  rec.resolution = opts.resolution > 0 ? opts.resolution : auto_resolution(body, delta_min);
  const double expo = 2.0 / (n + 1.0);
  for (int k = 0; k < opts.steps; ++k) {
    const double delta = opts.delta0 * std::pow(4.0, -k);
    const BodyApproximation approx = build_ulam_body(body, w, delta, opts.m, opts.approx);
    VolumeDifference vd;
    if (n == 2 && opts.refine_planar) {
      const UlamRadialOracle2D oracle(body, w, delta, approx, opts.approx.caps);
      const double tol = opts.radial_rel_tol;
      vd = volume_difference(
          body, [&](const Vec& x) { return oracle.query(x, tol); }, rec.resolution,
          opts.approx.threads);
    } else {
      vd = volume_difference(body, approx, rec.resolution, opts.approx.threads);
    }
    const double scale = std::pow(delta, expo);
    rec.rows.push_back({k, delta, vd.lo / scale, vd.hi / scale, vd.lo, vd.hi});
  }
  std::vector<double> mid;
  for (const auto& row : rec.rows) {
    mid.push_back(0.5 * (row.ratio_lo + row.ratio_hi));
  }
  const std::size_t s = mid.size();
  const double width = rec.rows.back().ratio_hi - rec.rows.back().ratio_lo;
  if (s >= 3) {
    rec.extrapolated = aitken(mid[s - 3], mid[s - 2], mid[s - 1]);
    const double residual = s >= 4 ? std::abs(rec.extrapolated - aitken(mid[s - 4], mid[s - 3], mid[s - 2]))
                                   : std::abs(rec.extrapolated - mid[s - 1]);
    rec.uncertainty = std::max(width, residual);
  } else {
    rec.extrapolated = mid.back();
    rec.uncertainty = s >= 2 ? std::max(width, std::abs(mid[s - 1] - mid[s - 2])) : width;
  }
  int direction = 0;
  for (std::size_t k = 1; k < s; ++k) {
    const auto& a = rec.rows[k - 1];
    const auto& b = rec.rows[k];
    int step = 0;
    if (b.ratio_hi < a.ratio_lo) {
      step = -1;
    } else if (b.ratio_lo > a.ratio_hi) {
      step = 1;
    }
    if (step != 0) {
      if (direction != 0 && step != direction) {
        rec.monotone = false;
        rec.flag = "ratios change direction at k=" + std::to_string(k);
      }
      direction = step;
    }
  }
  rec.reference = limit_reference(body, w);
  return rec;
}

ExperimentRecord corollary_pasa_experiment(const Body& body, double p, const LimitOptions& opts,
                                           PhiExtension ext) {
  const Weight w = Weight::phi_p(p, body, ext);
  ExperimentRecord rec = limit_experiment(body, w, opts);
  rec.reference = validated_c_n(body.dim()) * asa_p(body, p);
  return rec;
}

}  // namespace ulamfloat
