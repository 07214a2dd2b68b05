#include "ulamfloat/weight.hpp"

#include <limits>
#include <sstream>

namespace ulamfloat {

std::pair<double, double> phi_p_exponents(int n, double p) {
  if (std::isnan(p)) {
    throw InvalidInput("p must be a number");
  }
  if (std::isinf(p)) {
    return {0.5 * n * (n + 1), 0.5 * n};
  }
  if (p == -static_cast<double>(n)) {
    throw InvalidInput("p = -n is excluded");
  }
  const double q = (p - 1.0) / (2.0 * (n + p));
  return {n * (n + 1) * q, n * q};
}

double phi_p_boundary_value(int n, double p, double support_number, double curvature) {
  const auto [a, b] = phi_p_exponents(n, p);
  return std::pow(support_number, a) / std::pow(curvature, b);
}

Weight Weight::constant(double s) {
  if (!(s > 0.0) || !std::isfinite(s)) {
    throw InvalidInput("constant weight must be positive and finite");
  }
  Weight w;
  w.kind_ = WeightKind::Constant;
  w.eval_ = [s](const Vec&) { return s; };
  w.constant_ = s;
  w.log_concave_ = true;
  std::ostringstream os;
  os.precision(17);
  os << "constant(" << s << ")";
  w.id_ = os.str();
  return w;
}

Weight Weight::gaussian(Vec center, double sigma, double scale) {
  if (!(sigma > 0.0) || !std::isfinite(sigma)) {
    throw InvalidInput("gaussian sigma must be positive and finite");
  }
  if (!(scale > 0.0) || !std::isfinite(scale)) {
    throw InvalidInput("gaussian scale must be positive and finite");
  }
  if (!center.allFinite()) {
    throw InvalidInput("gaussian center must be finite");
  }
  Weight w;
  w.kind_ = WeightKind::Gaussian;
  w.dim_ = static_cast<int>(center.size());
  const double inv = 1.0 / (2.0 * sigma * sigma);
  w.eval_ = [c = std::move(center), inv, scale](const Vec& x) {
    return scale * std::exp(-(x - c).squaredNorm() * inv);
  };
  w.log_concave_ = true;
  std::ostringstream os;
  os.precision(17);
  os << "gaussian(sigma=" << sigma << ")";
  w.id_ = os.str();
  return w;
}

Weight Weight::phi_p(double p, const Body& host, PhiExtension ext, double collar) {
  if (host.kind() == BodyKind::Polytope) {
    throw InvalidInput("phi_p is undefined on polytopes (curvature vanishes on facets)");
  }
  if (!host.origin_interior()) {
    throw InvalidInput("phi_p needs the origin in the interior of the host body");
  }
  if (ext == PhiExtension::Collar && !(collar > 0.0 && collar < 1.0)) {
    throw InvalidInput("collar width must lie in (0, 1)");
  }
  const int n = host.dim();
  phi_p_exponents(n, p);
  Weight w;
  w.kind_ = WeightKind::PhiP;
  w.dim_ = n;
  w.log_concave_ = false;
  const Vec o = host.interior_point();
  const double diam = host.diameter();
  auto boundary_value = [host, p, n, o](const Vec& x) {
    Vec u = x - o;
    if (!(u.norm() > 0.0)) {
      u = Vec::Unit(n, 0);
    }
    const double q = u.dot(host.shape() * u);
    const Vec y = o + u / std::sqrt(q);
    const Vec g = host.shape() * (y - host.center());
    const double gn = g.norm();
    const double kappa = host.shape().determinant() / std::pow(gn, n + 1);
    const double hn = y.dot(g) / gn;
    return std::pair<double, double>{phi_p_boundary_value(n, p, hn, kappa), std::sqrt(q)};
  };
  if (ext == PhiExtension::Radial) {
    w.eval_ = [host, boundary_value, diam](const Vec& x) {
      if (!host.contains(x, 1e-9 * diam)) {
        throw InvalidInput("phi_p evaluated outside its host body");
      }
      return boundary_value(x).first;
    };
  } else {
    w.eval_ = [host, boundary_value, diam, o, collar](const Vec& x) {
      if (!host.contains(x, 1e-9 * diam)) {
        throw InvalidInput("phi_p evaluated outside its host body");
      }
      const auto [phi, q] = boundary_value(x);
      // Relative radial position s in [0, 1] along the ray from o.
      const double s = (x - o).norm() * q;
      const double inner = 1.0 - collar;
      if (s >= inner) {
        return phi;
      }
      return 1.0 + (phi - 1.0) * s / inner;
    };
  }
  const bool centered_ball = host.kind() == BodyKind::Ball && host.center().norm() == 0.0;
  if (p == 1.0) {
    w.constant_ = 1.0;
  } else if (centered_ball && ext == PhiExtension::Radial) {
    const double rho = host.radius();
    const auto [a, b] = phi_p_exponents(n, p);
    w.constant_ = std::pow(rho, a + (n - 1) * b);
  }
  std::ostringstream os;
  os.precision(17);
  os << "phi_p(p=" << p << (ext == PhiExtension::Radial ? ",radial" : ",collar") << ")";
  w.id_ = os.str();
  return w;
}

Weight Weight::scaled(double s) const {
  if (!(s > 0.0) || !std::isfinite(s)) {
    throw InvalidInput("weight scale must be positive and finite");
  }
  Weight w = *this;
  w.eval_ = [f = eval_, s](const Vec& x) { return s * f(x); };
  if (constant_) {
    w.constant_ = s * *constant_;
  }
  std::ostringstream os;
  os.precision(17);
  os << s << "*" << id_;
  w.id_ = os.str();
  return w;
}

Weight Weight::pushed_forward(const Mat& t, const Vec& v) const {
  const Mat tinv = t.inverse();
  if (!tinv.allFinite()) {
    throw InvalidInput("affine map must be invertible");
  }
  Weight w = *this;
  w.kind_ = WeightKind::Affine;
  w.dim_ = static_cast<int>(t.rows());
  w.eval_ = [f = eval_, tinv, v](const Vec& x) { return f(tinv * (x - v)); };
  w.id_ = "affine(" + id_ + ")";
  return w;
}

double Weight::operator()(const Vec& x) const { return eval_(x); }

}  // namespace ulamfloat
