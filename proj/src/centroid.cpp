#include "ulamfloat/centroid.hpp"

#include "ulamfloat/parallel.hpp"
#include "ulamfloat/quadrature.hpp"
#include "ulamfloat/sphere.hpp"

#include <boost/math/quadrature/tanh_sinh.hpp>

#include <algorithm>

namespace ulamfloat {

namespace {

// int_a^b |t|^p t^k dt (times sgn t when `odd`), for an interval not straddling 0.
double power_moment(double a, double b, double p, int k, bool odd) {
  const double q = p + k + 1.0;
  if (a >= 0.0) {
    return (std::pow(b, q) - std::pow(a, q)) / q;
  }
  // t = -s on [-b, -a] with -b >= 0.
  const double sign = (k % 2 == 0 ? 1.0 : -1.0) * (odd ? -1.0 : 1.0);
  return sign * (std::pow(-a, q) - std::pow(-b, q)) / q;
}

ZpValue polytope_zp(const Body& body, double p, const Vec& theta) {
  const int n = body.dim();
  std::vector<double> heights;
  for (const auto& v : body.vertices()) {
    heights.push_back(v.dot(theta));
  }
  std::sort(heights.begin(), heights.end());
  const double span = heights.back() - heights.front();
  std::vector<double> cuts{heights.front()};
  for (double h : heights) {
    if (h - cuts.back() > 1e-12 * span) {
      cuts.push_back(h);
    }
  }
  cuts.back() = heights.back();
  const int deg = n;  // section first moments are polynomials of degree <= n on each piece
  const auto& gl = quad::gauss_legendre(deg + 1);
  double value = 0.0;
  Vec grad = Vec::Zero(n);
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double a = cuts[i];
    const double b = cuts[i + 1];
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    // Fit section measure and first moment as polynomials in s = (t - mid) / half.
    Mat vand(deg + 1, deg + 1);
    Mat rhs(deg + 1, n + 1);
    for (int j = 0; j <= deg; ++j) {
      const double s = gl.nodes[j];
      const double t = mid + half * s;
      const auto sec = body.cell().section(theta, t);
      for (int k = 0; k <= deg; ++k) {
        vand(j, k) = std::pow(s, k);
      }
      rhs(j, 0) = sec.m0;
      rhs.row(j).tail(n) = sec.m1.transpose();
    }
    const Mat coef_s = vand.partialPivLu().solve(rhs);
    // Convert to monomials in t: s^k = ((t - mid) / half)^k.
    Mat coef_t = Mat::Zero(deg + 1, n + 1);
    for (int k = 0; k <= deg; ++k) {
      double binom = 1.0;
      for (int j = 0; j <= k; ++j) {
        // term: C(k, j) t^j (-mid)^{k-j} / half^k
        const double factor = binom * std::pow(-mid, k - j) / std::pow(half, k);
        coef_t.row(j) += factor * coef_s.row(k);
        binom = binom * (k - j) / (j + 1);
      }
    }
    std::vector<std::pair<double, double>> parts;
    if (a < 0.0 && b > 0.0) {
      parts = {{a, 0.0}, {0.0, b}};
    } else {
      parts = {{a, b}};
    }
    for (const auto& [lo, hi] : parts) {
      for (int k = 0; k <= deg; ++k) {
        value += coef_t(k, 0) * power_moment(lo, hi, p, k, false);
        grad += coef_t.row(k).tail(n).transpose() * power_moment(lo, hi, p - 1.0, k, true);
      }
    }
  }
  const double h = std::pow(value, 1.0 / p);
  return {h, grad * std::pow(h, 1.0 - p)};
}

ZpValue ellipsoid_zp(const Body& body, double p, const Vec& theta) {
  const int n = body.dim();
  const Vec lt = body.half_axes() * theta;
  const double w = lt.norm();
  const Vec lu = body.half_axes() * (lt / w);  // L theta'
  const double tc = body.center().dot(theta);
  const double scale = body.half_axes_det() * unit_ball_volume(n - 1);
  const double e = 0.5 * (n - 1);
  boost::math::quadrature::tanh_sinh<double> ts;
  std::vector<std::pair<double, double>> parts;
  const double s0 = -tc / w;
  if (s0 > -1.0 && s0 < 1.0) {
    parts = {{-1.0, s0}, {s0, 1.0}};
  } else {
    parts = {{-1.0, 1.0}};
  }
  double value = 0.0;
  double g0 = 0.0;  // int |t|^{p-1} sgn(t) (1-s^2)^e ds
  double g1 = 0.0;  // int |t|^{p-1} sgn(t) s (1-s^2)^e ds
  for (const auto& [lo, hi] : parts) {
    auto weight = [&](double s) { return std::pow(std::max(0.0, (1.0 - s) * (1.0 + s)), e); };
    value += ts.integrate(
        [&](double s) { return std::pow(std::abs(tc + w * s), p) * weight(s); }, lo, hi);
    auto odd = [&](double s) {
      const double t = tc + w * s;
      return std::pow(std::abs(t), p - 1.0) * (t < 0.0 ? -1.0 : 1.0) * weight(s);
    };
    g0 += ts.integrate(odd, lo, hi);
    g1 += ts.integrate([&](double s) { return s * odd(s); }, lo, hi);
  }
  value *= scale;
  const Vec grad = scale * (g0 * body.center() + g1 * lu);
  const double h = std::pow(value, 1.0 / p);
  return {h, grad * std::pow(h, 1.0 - p)};
}

}  // namespace

ZpValue zp_support(const Body& body, double p, const Direction& theta) {
  if (!(p >= 1.0) || !std::isfinite(p)) {
    throw InvalidInput("Z_p needs 1 <= p < infinity");
  }
  if (std::abs(body.volume() - 1.0) > 1e-9) {
    throw InvalidInput("Z_p is defined here for bodies of volume 1; normalize the body first");
  }
  if (theta.dim() != body.dim()) {
    throw InvalidInput("direction dimension does not match the body");
  }
  if (body.kind() == BodyKind::Polytope) {
    return polytope_zp(body, p, theta.vec());
  }
  return ellipsoid_zp(body, p, theta.vec());
}

BodyApproximation build_zp_body(const Body& body, double p, int m, int threads) {
  const int n = body.dim();
  if (m < 2 * n + 2 || m % 2 != 0) {
    throw InvalidInput("direction count m must be even and at least 2n+2");
  }
  BodyApproximation approx;
  approx.kind = ApproxKind::CentroidZp;
  approx.dim = n;
  approx.param = p;
  approx.weight_id = "constant(1)";
  approx.directions = direction_grid(n, m);
  approx.support_values.assign(m, 0.0);
  approx.boundary_points.assign(m, Vec());
  parallel_for(
      m,
      [&](int i) {
        const auto z = zp_support(body, p, approx.directions[i]);
        approx.support_values[i] = z.h;
        approx.boundary_points[i] = z.x;
      },
      threads);
  assemble_cells(approx, nullptr);
  return approx;
}

}  // namespace ulamfloat
