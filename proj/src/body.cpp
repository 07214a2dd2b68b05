#include "ulamfloat/body.hpp"

#include "ulamfloat/quadrature.hpp"
#include "ulamfloat/sphere.hpp"

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

namespace ulamfloat {

namespace {

constexpr int kMaxDim = 10;

void require_finite(const Vec& v, const char* what) {
  if (!v.allFinite()) {
    throw InvalidInput(std::string(what) + " must be finite");
  }
}

// Chebyshev center by enumerating vertices of the LP
//   max r  s.t.  <n_i, x> + r <= b_i.
std::pair<Vec, double> chebyshev_center(const std::vector<Facet>& facets, int n,
                                        const Vec& fallback) {
  const int f = static_cast<int>(facets.size());
  const int k = n + 1;
  double combos = 1.0;
  for (int i = 0; i < k; ++i) {
    combos *= static_cast<double>(f - i) / (i + 1);
  }
  double scale = 1e-300;
  for (const auto& fc : facets) {
    scale = std::max(scale, std::abs(fc.offset));
  }
  auto slack = [&](const Vec& x) {
    double r = std::numeric_limits<double>::infinity();
    for (const auto& fc : facets) {
      r = std::min(r, fc.offset - fc.normal.dot(x));
    }
    return r;
  };
  if (combos > 3e5) {
    return {fallback, slack(fallback)};
  }
  std::vector<int> pick(k);
  std::iota(pick.begin(), pick.end(), 0);
  double best = -std::numeric_limits<double>::infinity();
  std::vector<Vec> optima;
  const double tol = 1e-11 * scale;
  while (true) {
    Mat m(k, k);
    Vec rhs(k);
    for (int i = 0; i < k; ++i) {
      m.row(i).head(n) = facets[pick[i]].normal.transpose();
      m(i, n) = 1.0;
      rhs[i] = facets[pick[i]].offset;
    }
    Eigen::FullPivLU<Mat> lu(m);
    if (lu.isInvertible()) {
      const Vec sol = lu.solve(rhs);
      const Vec x = sol.head(n);
      const double r = sol[n];
      if (slack(x) >= r - tol) {
        if (r > best + tol) {
          best = r;
          optima.clear();
          optima.push_back(x);
        } else if (r >= best - tol) {
          optima.push_back(x);
        }
      }
    }
    int i = k - 1;
    while (i >= 0 && pick[i] == f - k + i) {
      --i;
    }
    if (i < 0) {
      break;
    }
    ++pick[i];
    for (int j = i + 1; j < k; ++j) {
      pick[j] = pick[j - 1] + 1;
    }
  }
  if (optima.empty()) {
    return {fallback, slack(fallback)};
  }
  Vec c = Vec::Zero(n);
  for (const auto& x : optima) {
    c += x;
  }
  c /= static_cast<double>(optima.size());
  return {c, slack(c)};
}

}  // namespace

std::string to_string(BodyKind kind) {
  switch (kind) {
    case BodyKind::Ball:
      return "ball";
    case BodyKind::Ellipsoid:
      return "ellipsoid";
    case BodyKind::Polytope:
      return "polytope";
  }
  return "unknown";
}

Body Body::ball(Vec center, double radius) {
  require_finite(center, "ball center");
  const int n = static_cast<int>(center.size());
  if (n < 2 || n > kMaxDim) {
    throw InvalidInput("ball dimension must lie in [2, 10]");
  }
  if (!(radius > 0.0) || !std::isfinite(radius)) {
    throw InvalidInput("ball radius must be positive and finite");
  }
  Body b;
  b.kind_ = BodyKind::Ball;
  b.dim_ = n;
  b.center_ = std::move(center);
  b.radius_ = radius;
  b.shape_ = Mat::Identity(n, n) / (radius * radius);
  b.half_axes_ = Mat::Identity(n, n) * radius;
  b.half_axes_det_ = std::pow(radius, n);
  b.offset_ = Vec::Zero(n);
  b.finish();
  return b;
}

Body Body::ellipsoid(Vec center, Mat shape) {
  require_finite(center, "ellipsoid center");
  const int n = static_cast<int>(center.size());
  if (n < 2 || n > kMaxDim) {
    throw InvalidInput("ellipsoid dimension must lie in [2, 10]");
  }
  if (shape.rows() != n || shape.cols() != n) {
    throw InvalidInput("ellipsoid shape must be an n x n matrix matching the center");
  }
  if (!shape.allFinite()) {
    throw InvalidInput("ellipsoid shape must be finite");
  }
  if ((shape - shape.transpose()).cwiseAbs().maxCoeff() > 1e-12) {
    throw InvalidInput("ellipsoid shape must be symmetric");
  }
  shape = 0.5 * (shape + shape.transpose());
  Eigen::SelfAdjointEigenSolver<Mat> eig(shape);
  if (eig.eigenvalues().minCoeff() <= 0.0) {
    throw InvalidInput("ellipsoid shape must be positive definite");
  }
  Body b;
  b.kind_ = BodyKind::Ellipsoid;
  b.dim_ = n;
  b.center_ = std::move(center);
  const Vec inv_sqrt = eig.eigenvalues().cwiseSqrt().cwiseInverse();
  b.half_axes_ = eig.eigenvectors() * inv_sqrt.asDiagonal() * eig.eigenvectors().transpose();
  b.half_axes_ = 0.5 * (b.half_axes_ + b.half_axes_.transpose());
  b.half_axes_det_ = inv_sqrt.prod();
  b.shape_ = std::move(shape);
  b.offset_ = Vec::Zero(n);
  b.finish();
  return b;
}

Body Body::polytope(const std::vector<Vec>& points) {
  if (points.empty()) {
    throw InvalidInput("polytope needs vertices");
  }
  const int n = static_cast<int>(points[0].size());
  if (n != 2 && n != 3) {
    throw InvalidInput("polytopes are supported in dimensions 2 and 3 only");
  }
  for (const auto& p : points) {
    if (p.size() != n) {
      throw InvalidInput("polytope vertices must share one dimension");
    }
    require_finite(p, "polytope vertex");
  }
  if (static_cast<int>(points.size()) < n + 1) {
    throw InvalidInput("polytope needs at least n+1 affinely independent vertices");
  }
  Body b;
  b.kind_ = BodyKind::Polytope;
  b.dim_ = n;
  b.offset_ = Vec::Zero(n);
  if (n == 2) {
    const std::vector<int> idx = geom::hull2d_indices(points);
    if (idx.size() < 3) {
      throw InvalidInput("polytope vertices are affinely dependent (collinear)");
    }
    for (int i : idx) {
      b.vertices_.push_back(points[i]);
    }
    const int m = static_cast<int>(b.vertices_.size());
    for (int i = 0; i < m; ++i) {
      const Vec e = b.vertices_[(i + 1) % m] - b.vertices_[i];
      Vec nrm(2);
      nrm << e[1], -e[0];
      nrm.normalize();
      b.facets_.push_back({nrm, nrm.dot(b.vertices_[i]), {i, (i + 1) % m}});
    }
    b.cell_ = geom::ConvexCell::polygon(b.vertices_);
  } else {
    const auto hf = geom::hull3d_facets(points);
    std::vector<int> remap(points.size(), -1);
    std::vector<std::vector<Vec>> faces;
    for (const auto& f : hf) {
      Facet facet{f.normal, f.offset, {}};
      std::vector<Vec> loop;
      for (int v : f.loop) {
        if (remap[v] < 0) {
          remap[v] = static_cast<int>(b.vertices_.size());
          b.vertices_.push_back(points[v]);
        }
        facet.loop.push_back(remap[v]);
        loop.push_back(points[v]);
      }
      b.facets_.push_back(std::move(facet));
      faces.push_back(std::move(loop));
    }
    b.cell_ = geom::ConvexCell::polyhedron(std::move(faces));
  }
  b.finish();
  if (!(b.volume_ > 0.0)) {
    throw InvalidInput("polytope vertices are affinely dependent (zero volume)");
  }
  return b;
}

void Body::finish() {
  if (kind_ == BodyKind::Polytope) {
    const auto mom = cell_.moments();
    volume_ = mom.m0;
    barycenter_ = mom.m1 / mom.m0;
    diameter_ = 0.0;
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
      for (std::size_t j = i + 1; j < vertices_.size(); ++j) {
        diameter_ = std::max(diameter_, (vertices_[i] - vertices_[j]).norm());
      }
    }
    auto [c, r] = chebyshev_center(facets_, dim_, barycenter_);
    interior_point_ = c;
    inradius_ = r;
  } else {
    volume_ = unit_ball_volume(dim_) * half_axes_det_;
    barycenter_ = center_;
    Eigen::SelfAdjointEigenSolver<Mat> eig(half_axes_);
    diameter_ = 2.0 * eig.eigenvalues().maxCoeff();
    interior_point_ = center_;
    inradius_ = eig.eigenvalues().minCoeff();
  }
}

double Body::radius() const {
  if (kind_ != BodyKind::Ball) {
    throw InvalidInput("radius is defined for balls only");
  }
  return radius_;
}

double Body::support(const Vec& theta) const {
  if (theta.size() != dim_) {
    throw InvalidInput("direction dimension does not match the body");
  }
  if (kind_ == BodyKind::Polytope) {
    double best = -std::numeric_limits<double>::infinity();
    for (const auto& v : vertices_) {
      best = std::max(best, v.dot(theta));
    }
    return best;
  }
  return center_.dot(theta) + (half_axes_ * theta).norm();
}

Vec Body::support_point(const Vec& theta) const {
  if (kind_ == BodyKind::Polytope) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < vertices_.size(); ++i) {
      if (vertices_[i].dot(theta) > vertices_[best].dot(theta)) {
        best = i;
      }
    }
    return vertices_[best];
  }
  const Vec lt = half_axes_ * theta;
  return center_ + half_axes_ * lt / lt.norm();
}

bool Body::contains(const Vec& x, double tol) const {
  if (x.size() != dim_) {
    throw InvalidInput("point dimension does not match the body");
  }
  if (kind_ == BodyKind::Polytope) {
    for (const auto& f : facets_) {
      if (f.normal.dot(x) - f.offset > tol) {
        return false;
      }
    }
    return true;
  }
  const Vec y = x - center_;
  return y.dot(shape_ * y) <= 1.0 + tol;
}

Body Body::apply_linear(const Mat& t) const {
  if (t.rows() != dim_ || t.cols() != dim_) {
    throw InvalidInput("linear map must be n x n");
  }
  const double det = t.determinant();
  const double norm = t.cwiseAbs().maxCoeff();
  if (!std::isfinite(det) || std::abs(det) <= 1e-14 * std::pow(norm, dim_)) {
    throw InvalidInput("linear map is singular");
  }
  Body out;
  if (kind_ == BodyKind::Polytope) {
    std::vector<Vec> pts;
    for (const auto& v : vertices_) {
      pts.push_back(t * v);
    }
    out = polytope(pts);
  } else {
    const Mat ttt = t * t.transpose();
    const double s2 = ttt.trace() / dim_;
    if (kind_ == BodyKind::Ball &&
        (ttt - s2 * Mat::Identity(dim_, dim_)).cwiseAbs().maxCoeff() <= 1e-12 * s2) {
      out = ball(t * center_, radius_ * std::sqrt(s2));
    } else {
      const Mat tinv = t.inverse();
      Mat a = tinv.transpose() * shape_ * tinv;
      a = 0.5 * (a + a.transpose());
      out = ellipsoid(t * center_, a);
    }
  }
  out.offset_ = t * offset_;
  return out;
}

Body Body::translated(const Vec& v) const {
  if (v.size() != dim_) {
    throw InvalidInput("translation dimension does not match the body");
  }
  Body out;
  if (kind_ == BodyKind::Polytope) {
    std::vector<Vec> pts;
    for (const auto& p : vertices_) {
      pts.push_back(p + v);
    }
    out = polytope(pts);
  } else if (kind_ == BodyKind::Ball) {
    out = ball(center_ + v, radius_);
  } else {
    out = ellipsoid(center_ + v, shape_);
  }
  out.offset_ = offset_;
  return out;
}

Body Body::recentered() const {
  Body out = translated(-interior_point_);
  out.offset_ = offset_ + interior_point_;
  return out;
}

Body Body::normalized() const {
  const double s = std::pow(volume_, -1.0 / dim_);
  Body out = translated(-barycenter_).apply_linear(Mat::Identity(dim_, dim_) * s);
  out.offset_ = offset_ + barycenter_;
  return out;
}

bool Body::origin_interior() const {
  if (kind_ == BodyKind::Polytope) {
    for (const auto& f : facets_) {
      if (f.offset <= 1e-12 * diameter_) {
        return false;
      }
    }
    return true;
  }
  return center_.dot(shape_ * center_) < 1.0 - 1e-12;
}

double Body::radial(const Vec& u) const {
  if (!origin_interior()) {
    throw InvalidInput("radial queries need the origin in the interior of the body");
  }
  const double nu = u.norm();
  if (!(nu > 0.0)) {
    throw InvalidInput("radial direction must be non-zero");
  }
  if (kind_ == BodyKind::Polytope) {
    double r = std::numeric_limits<double>::infinity();
    for (const auto& f : facets_) {
      const double d = f.normal.dot(u);
      if (d > 0.0) {
        r = std::min(r, f.offset / d);
      }
    }
    return r;
  }
  const Vec au = shape_ * u;
  const double qa = u.dot(au);
  const double qb = au.dot(center_);
  const double qc = center_.dot(shape_ * center_) - 1.0;
  return (qb + std::sqrt(qb * qb - qa * qc)) / qa;
}

std::optional<double> Body::gaussian_curvature(const Vec& x) const {
  if (kind_ == BodyKind::Polytope) {
    const double tol = 1e-10 * diameter_;
    int active = 0;
    for (const auto& f : facets_) {
      if (std::abs(f.normal.dot(x) - f.offset) <= tol) {
        ++active;
      }
    }
    if (active == 1) {
      return 0.0;
    }
    return std::nullopt;
  }
  const Vec g = shape_ * (x - center_);
  return shape_.determinant() / std::pow(g.norm(), dim_ + 1);
}

Vec Body::outer_normal(const Vec& x) const {
  if (kind_ == BodyKind::Polytope) {
    std::size_t best = 0;
    double val = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < facets_.size(); ++i) {
      const double s = facets_[i].normal.dot(x) - facets_[i].offset;
      if (s > val) {
        val = s;
        best = i;
      }
    }
    return facets_[best].normal;
  }
  return (shape_ * (x - center_)).normalized();
}

BoundaryRule Body::boundary_quadrature(int resolution) const {
  if (resolution < 1) {
    throw InvalidInput("boundary quadrature resolution must be positive");
  }
  BoundaryRule rule;
  if (kind_ != BodyKind::Polytope) {
    const auto nodes = sphere_quadrature(dim_, resolution);
    const double det_a = shape_.determinant();
    rule.has_coarse = dim_ == 2 && resolution % 2 == 0;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      const Vec& u = nodes[i].u;
      const Vec x = center_ + half_axes_ * u;
      const Vec g = shape_ * (half_axes_ * u);  // L^{-1} u
      const double gn = g.norm();
      const Vec nrm = g / gn;
      BoundarySample s;
      s.x = x;
      s.normal = nrm;
      s.weight = nodes[i].weight * half_axes_det_ * gn;
      s.coarse_weight = rule.has_coarse && i % 2 == 0 ? 2.0 * s.weight : 0.0;
      s.curvature = det_a / std::pow(gn, dim_ + 1);
      s.support_number = x.dot(nrm);
      s.smooth = true;
      rule.samples.push_back(std::move(s));
    }
    return rule;
  }
  if (dim_ == 2) {
    using GK = boost::math::quadrature::gauss_kronrod<double, 15>;
    using G7 = boost::math::quadrature::gauss<double, 7>;
    const auto& xs = GK::abscissa();
    const auto& wk = GK::weights();
    const auto& wg = G7::weights();
    rule.has_coarse = true;
    const int levels = std::min(resolution, 48);
    for (const auto& f : facets_) {
      const Vec& p = vertices_[f.loop[0]];
      const Vec& q = vertices_[f.loop[1]];
      const double len = (q - p).norm();
      // Panels in the edge parameter s in [0, 1], geometric toward both ends.
      std::vector<double> cuts{0.0};
      for (int l = levels; l >= 1; --l) {
        cuts.push_back(0.5 * std::ldexp(1.0, -l + 1) * 0.5);
      }
      std::vector<double> all = cuts;
      all.push_back(0.5);
      for (auto it = cuts.rbegin(); it != cuts.rend(); ++it) {
        all.push_back(1.0 - *it);
      }
      for (std::size_t k = 0; k + 1 < all.size(); ++k) {
        const double a = all[k];
        const double b = all[k + 1];
        if (!(b > a)) {
          continue;
        }
        const double half = 0.5 * (b - a);
        const double mid = 0.5 * (a + b);
        for (int j = -static_cast<int>(xs.size()) + 1; j < static_cast<int>(xs.size()); ++j) {
          const std::size_t i = static_cast<std::size_t>(std::abs(j));
          const double s = mid + (j < 0 ? -1.0 : 1.0) * half * xs[i];
          BoundarySample smp;
          smp.x = p + s * (q - p);
          smp.normal = f.normal;
          smp.weight = len * half * wk[i];
          smp.coarse_weight = i % 2 == 0 ? len * half * wg[i / 2] : 0.0;
          smp.curvature = 0.0;
          smp.support_number = f.offset;
          smp.smooth = true;
          rule.samples.push_back(std::move(smp));
        }
      }
    }
    return rule;
  }
  const auto& tri_rule = quad::simplex_rule(2, 4);
  const int r = resolution;
  for (const auto& f : facets_) {
    for (std::size_t t = 1; t + 1 < f.loop.size(); ++t) {
      const Vec& a = vertices_[f.loop[0]];
      const Vec& b = vertices_[f.loop[t]];
      const Vec& c = vertices_[f.loop[t + 1]];
      const Vec eb = (b - a) / r;
      const Vec ec = (c - a) / r;
      const Eigen::Vector3d e1 = eb;
      const Eigen::Vector3d e2 = ec;
      const double area = 0.5 * e1.cross(e2).norm();
      auto emit = [&](const Vec& p0, const Vec& p1, const Vec& p2) {
        for (std::size_t k = 0; k < tri_rule.weights.size(); ++k) {
          const Vec& w = tri_rule.barycentric[k];
          BoundarySample smp;
          smp.x = w[0] * p0 + w[1] * p1 + w[2] * p2;
          smp.normal = f.normal;
          smp.weight = area * tri_rule.weights[k];
          smp.coarse_weight = 0.0;
          smp.curvature = 0.0;
          smp.support_number = f.offset;
          smp.smooth = true;
          rule.samples.push_back(std::move(smp));
        }
      };
      for (int i = 0; i < r; ++i) {
        for (int j = 0; i + j < r; ++j) {
          const Vec p00 = a + i * eb + j * ec;
          emit(p00, p00 + eb, p00 + ec);
          if (i + j + 1 < r) {
            emit(p00 + eb, p00 + eb + ec, p00 + ec);
          }
        }
      }
    }
  }
  return rule;
}

std::string Body::describe() const {
  std::ostringstream os;
  os << to_string(kind_) << " in R^" << dim_;
  if (kind_ == BodyKind::Ball) {
    os << " radius " << radius_;
  } else if (kind_ == BodyKind::Polytope) {
    os << " with " << vertices_.size() << " vertices";
  }
  return os.str();
}

}  // namespace ulamfloat
