#include "ulamfloat/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <deque>
#include <limits>
#include <numeric>
#include <unordered_set>

namespace ulamfloat::geom {

namespace {

double point_scale(const std::vector<Vec>& pts) {
  double s = 0.0;
  for (const auto& p : pts) {
    s = std::max(s, p.cwiseAbs().maxCoeff());
  }
  return std::max(s, 1e-300);
}

Vec cross3(const Vec& a, const Vec& b) {
  Vec c(3);
  c << a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0];
  return c;
}

// Newell normal (area-weighted, not normalized) of a planar loop.
Vec newell(const std::vector<Vec>& loop) {
  Vec n = Vec::Zero(3);
  for (std::size_t i = 0; i < loop.size(); ++i) {
    const Vec& p = loop[i];
    const Vec& q = loop[(i + 1) % loop.size()];
    n[0] += (p[1] - q[1]) * (p[2] + q[2]);
    n[1] += (p[2] - q[2]) * (p[0] + q[0]);
    n[2] += (p[0] - q[0]) * (p[1] + q[1]);
  }
  return n;
}

// Orthonormal in-plane basis (e1, e2) with e1 x e2 = n / |n|.
std::pair<Vec, Vec> plane_basis(const Vec& n) {
  const Mat b = orthonormal_complement(Direction(n));
  Vec e1 = b.col(0);
  Vec e2 = b.col(1);
  if (cross3(e1, e2).dot(n) < 0.0) {
    std::swap(e1, e2);
  }
  return {e1, e2};
}

// Counter-clockwise (about n) convex loop of the given coplanar points.
std::vector<Vec> planar_loop(const std::vector<Vec>& pts, const Vec& n) {
  if (pts.size() < 3) {
    return {};
  }
  const auto [e1, e2] = plane_basis(n);
  std::vector<Vec> proj;
  proj.reserve(pts.size());
  for (const auto& p : pts) {
    Vec q(2);
    q << p.dot(e1), p.dot(e2);
    proj.push_back(q);
  }
  const std::vector<int> idx = hull2d_indices(proj);
  std::vector<Vec> loop;
  loop.reserve(idx.size());
  for (int i : idx) {
    loop.push_back(pts[i]);
  }
  return loop;
}

void dedupe(std::vector<Vec>& pts, double tol) {
  std::vector<Vec> out;
  for (auto& p : pts) {
    bool dup = false;
    for (const auto& q : out) {
      if ((p - q).cwiseAbs().maxCoeff() <= tol) {
        dup = true;
        break;
      }
    }
    if (!dup) {
      out.push_back(std::move(p));
    }
  }
  pts = std::move(out);
}

// Removes consecutive (cyclic) near-duplicates of an ordered loop.
void dedupe_loop(std::vector<Vec>& pts, double tol) {
  std::vector<Vec> out;
  for (auto& p : pts) {
    if (out.empty() || (p - out.back()).cwiseAbs().maxCoeff() > tol) {
      out.push_back(std::move(p));
    }
  }
  while (out.size() > 1 && (out.front() - out.back()).cwiseAbs().maxCoeff() <= tol) {
    out.pop_back();
  }
  pts = std::move(out);
}

}  // namespace

void accumulate_simplex(const std::vector<Vec>& v, double measure, Moments& acc) {
  const int k = static_cast<int>(v.size()) - 1;
  Vec s = Vec::Zero(v[0].size());
  Mat vv = Mat::Zero(v[0].size(), v[0].size());
  for (const auto& p : v) {
    s += p;
    vv.noalias() += p * p.transpose();
  }
  acc.m0 += measure;
  acc.m1 += measure / (k + 1) * s;
  acc.m2 += measure / ((k + 1.0) * (k + 2.0)) * (vv + s * s.transpose());
}

std::vector<int> hull2d_indices(const std::vector<Vec>& pts) {
  const int n = static_cast<int>(pts.size());
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) {
    return pts[a][0] < pts[b][0] || (pts[a][0] == pts[b][0] && pts[a][1] < pts[b][1]);
  });
  if (n < 3) {
    return idx;
  }
  const double s = point_scale(pts);
  const double eps = 1e-14 * s * s;
  auto turn = [&](int o, int a, int b) {
    return cross2(pts[a] - pts[o], pts[b] - pts[o]);
  };
  std::vector<int> h(2 * n);
  int k = 0;
  for (int i = 0; i < n; ++i) {
    while (k >= 2 && turn(h[k - 2], h[k - 1], idx[i]) <= eps) {
      --k;
    }
    h[k++] = idx[i];
  }
  for (int i = n - 2, t = k + 1; i >= 0; --i) {
    while (k >= t && turn(h[k - 2], h[k - 1], idx[i]) <= eps) {
      --k;
    }
    h[k++] = idx[i];
  }
  h.resize(std::max(k - 1, 0));
  return h;
}

std::vector<Vec> hull2d(std::vector<Vec> pts) {
  const std::vector<int> idx = hull2d_indices(pts);
  std::vector<Vec> out;
  out.reserve(idx.size());
  for (int i : idx) {
    out.push_back(pts[i]);
  }
  return out;
}

std::vector<std::array<int, 3>> hull3d(const std::vector<Vec>& pts) {
  const int n = static_cast<int>(pts.size());
  if (n < 4) {
    throw InvalidInput("a 3D hull needs at least 4 affinely independent points");
  }
  const double scale = point_scale(pts);
  const double eps = 1e-12 * scale;

  // Initial tetrahedron from well-separated points.
  int i0 = 0;
  for (int i = 1; i < n; ++i) {
    if (pts[i][0] < pts[i0][0]) {
      i0 = i;
    }
  }
  int i1 = -1;
  double best = 0.0;
  for (int i = 0; i < n; ++i) {
    const double d = (pts[i] - pts[i0]).norm();
    if (d > best) {
      best = d;
      i1 = i;
    }
  }
  if (i1 < 0 || best <= eps) {
    throw InvalidInput("polytope vertices are affinely dependent (all points coincide)");
  }
  const Vec dir = (pts[i1] - pts[i0]) / best;
  int i2 = -1;
  best = 0.0;
  for (int i = 0; i < n; ++i) {
    const Vec r = pts[i] - pts[i0];
    const double d = (r - r.dot(dir) * dir).norm();
    if (d > best) {
      best = d;
      i2 = i;
    }
  }
  if (i2 < 0 || best <= eps) {
    throw InvalidInput("polytope vertices are affinely dependent (collinear)");
  }
  const Vec pn = cross3(pts[i1] - pts[i0], pts[i2] - pts[i0]).normalized();
  int i3 = -1;
  best = 0.0;
  for (int i = 0; i < n; ++i) {
    const double d = std::abs((pts[i] - pts[i0]).dot(pn));
    if (d > best) {
      best = d;
      i3 = i;
    }
  }
  if (i3 < 0 || best <= eps) {
    throw InvalidInput("polytope vertices are affinely dependent (coplanar)");
  }

  struct Tri {
    std::array<int, 3> v;
    Vec normal;
    double offset;
    bool alive;
  };
  std::vector<Tri> faces;
  const Vec inner = (pts[i0] + pts[i1] + pts[i2] + pts[i3]) / 4.0;
  auto make = [&](int a, int b, int c) {
    Vec nrm = cross3(pts[b] - pts[a], pts[c] - pts[a]);
    const double len = nrm.norm();
    if (len > 0.0) {
      nrm /= len;
    }
    Tri t{{a, b, c}, nrm, nrm.dot(pts[a]), true};
    return t;
  };
  auto oriented = [&](int a, int b, int c) {
    Tri t = make(a, b, c);
    if (t.normal.dot(inner) - t.offset > 0.0) {
      t = make(a, c, b);
    }
    return t;
  };
  faces.push_back(oriented(i0, i1, i2));
  faces.push_back(oriented(i0, i1, i3));
  faces.push_back(oriented(i0, i2, i3));
  faces.push_back(oriented(i1, i2, i3));

  auto key = [n](int a, int b) {
    return static_cast<std::uint64_t>(a) * static_cast<std::uint64_t>(n) +
           static_cast<std::uint64_t>(b);
  };
  std::vector<int> visible;
  std::unordered_set<std::uint64_t> edges;
  for (int p = 0; p < n; ++p) {
    if (p == i0 || p == i1 || p == i2 || p == i3) {
      continue;
    }
    visible.clear();
    for (int f = 0; f < static_cast<int>(faces.size()); ++f) {
      if (faces[f].alive && faces[f].normal.dot(pts[p]) - faces[f].offset > eps) {
        visible.push_back(f);
      }
    }
    if (visible.empty()) {
      continue;
    }
    edges.clear();
    for (int f : visible) {
      const auto& v = faces[f].v;
      for (int e = 0; e < 3; ++e) {
        edges.insert(key(v[e], v[(e + 1) % 3]));
      }
    }
    std::vector<std::pair<int, int>> horizon;
    for (int f : visible) {
      const auto& v = faces[f].v;
      for (int e = 0; e < 3; ++e) {
        const int a = v[e];
        const int b = v[(e + 1) % 3];
        if (!edges.count(key(b, a))) {
          horizon.emplace_back(a, b);
        }
      }
      faces[f].alive = false;
    }
    for (const auto& [a, b] : horizon) {
      faces.push_back(make(a, b, p));
    }
  }
  std::vector<std::array<int, 3>> out;
  for (const auto& f : faces) {
    if (f.alive) {
      out.push_back(f.v);
    }
  }
  return out;
}

std::vector<HullFacet> hull3d_facets(const std::vector<Vec>& pts) {
  const auto tris = hull3d(pts);
  const double scale = point_scale(pts);
  std::vector<HullFacet> facets;
  std::vector<std::vector<int>> members;
  for (const auto& t : tris) {
    Vec nrm = cross3(pts[t[1]] - pts[t[0]], pts[t[2]] - pts[t[0]]);
    const double len = nrm.norm();
    if (!(len > 0.0)) {
      continue;
    }
    nrm /= len;
    const double off = nrm.dot(pts[t[0]]);
    int slot = -1;
    for (int f = 0; f < static_cast<int>(facets.size()); ++f) {
      if (facets[f].normal.dot(nrm) > 1.0 - 1e-10 &&
          std::abs(facets[f].offset - off) <= 1e-10 * scale) {
        slot = f;
        break;
      }
    }
    if (slot < 0) {
      facets.push_back({nrm, off, {}});
      members.emplace_back();
      slot = static_cast<int>(facets.size()) - 1;
    }
    for (int v : t) {
      if (std::find(members[slot].begin(), members[slot].end(), v) == members[slot].end()) {
        members[slot].push_back(v);
      }
    }
  }
  for (std::size_t f = 0; f < facets.size(); ++f) {
    const auto [e1, e2] = plane_basis(facets[f].normal);
    std::vector<Vec> proj;
    for (int v : members[f]) {
      Vec q(2);
      q << pts[v].dot(e1), pts[v].dot(e2);
      proj.push_back(q);
    }
    for (int i : hull2d_indices(proj)) {
      facets[f].loop.push_back(members[f][i]);
    }
  }
  return facets;
}

ConvexCell ConvexCell::polygon(std::vector<Vec> ccw) {
  ConvexCell c;
  c.dim_ = 2;
  c.poly_ = std::move(ccw);
  c.empty_ = c.poly_.size() < 3;
  c.build_planes();
  return c;
}

ConvexCell ConvexCell::halfplanes(const std::vector<Vec>& normals,
                                  const std::vector<double>& offsets) {
  struct Line {
    double ax, ay, b, angle;
  };
  std::vector<Line> lines;
  double scale = 0.0;
  for (std::size_t i = 0; i < normals.size(); ++i) {
    const double len = normals[i].norm();
    if (!(len > 0.0)) {
      throw InvalidInput("halfplane normal must be non-zero");
    }
    const double ax = normals[i][0] / len;
    const double ay = normals[i][1] / len;
    lines.push_back({ax, ay, offsets[i] / len, std::atan2(ay, ax)});
    scale = std::max(scale, std::abs(offsets[i] / len));
  }
  std::sort(lines.begin(), lines.end(), [](const Line& p, const Line& q) {
    return p.angle < q.angle || (p.angle == q.angle && p.b < q.b);
  });
  std::vector<Line> uniq;
  for (const auto& l : lines) {
    if (!uniq.empty() && l.angle - uniq.back().angle <= 1e-15) {
      continue;
    }
    uniq.push_back(l);
  }
  const double eps = 1e-13 * std::max(scale, 1e-300);
  auto meet = [](const Line& p, const Line& q, double& x, double& y) {
    const double det = p.ax * q.ay - p.ay * q.ax;
    if (std::abs(det) < 1e-15) {
      return false;
    }
    x = (p.b * q.ay - p.ay * q.b) / det;
    y = (p.ax * q.b - p.b * q.ax) / det;
    return true;
  };
  auto outside = [&](const Line& l, const Line& p, const Line& q) {
    double x;
    double y;
    if (!meet(p, q, x, y)) {
      return true;
    }
    return l.ax * x + l.ay * y - l.b > eps;
  };
  std::deque<Line> dq;
  for (const auto& l : uniq) {
    while (dq.size() >= 2 && outside(l, dq[dq.size() - 2], dq.back())) {
      dq.pop_back();
    }
    while (dq.size() >= 2 && outside(l, dq[0], dq[1])) {
      dq.pop_front();
    }
    dq.push_back(l);
  }
  while (dq.size() >= 3 && outside(dq[0], dq[dq.size() - 2], dq.back())) {
    dq.pop_back();
  }
  while (dq.size() >= 3 && outside(dq.back(), dq[0], dq[1])) {
    dq.pop_front();
  }
  if (dq.size() < 3) {
    return {};
  }
  std::vector<Vec> poly;
  for (std::size_t i = 0; i < dq.size(); ++i) {
    const Line& p = dq[i];
    const Line& q = dq[(i + 1) % dq.size()];
    // Consecutive normals must turn counter-clockwise by less than pi.
    if (p.ax * q.ay - p.ay * q.ax <= 0.0) {
      return {};
    }
    double x;
    double y;
    meet(p, q, x, y);
    Vec v(2);
    v << x, y;
    poly.push_back(std::move(v));
  }
  dedupe_loop(poly, 1e-13 * std::max(scale, 1e-300));
  for (const auto& l : lines) {
    for (const auto& v : poly) {
      if (l.ax * v[0] + l.ay * v[1] - l.b > 1e3 * eps) {
        throw NumericalError("halfplane intersection failed validation");
      }
    }
  }
  if (poly.size() < 3) {
    return {};
  }
  return polygon(hull2d(poly));
}

ConvexCell ConvexCell::polyhedron(std::vector<std::vector<Vec>> faces) {
  ConvexCell c;
  c.dim_ = 3;
  c.faces_ = std::move(faces);
  c.empty_ = c.faces_.size() < 4;
  c.build_planes();
  return c;
}

ConvexCell ConvexCell::hull_of(const std::vector<Vec>& pts) {
  if (pts.empty()) {
    return {};
  }
  if (pts[0].size() == 2) {
    return polygon(hull2d(pts));
  }
  if (pts[0].size() != 3) {
    throw InvalidInput("convex cells exist in dimensions 2 and 3 only");
  }
  std::vector<std::vector<Vec>> faces;
  for (const auto& f : hull3d_facets(pts)) {
    std::vector<Vec> loop;
    for (int v : f.loop) {
      loop.push_back(pts[v]);
    }
    faces.push_back(std::move(loop));
  }
  return polyhedron(std::move(faces));
}

ConvexCell ConvexCell::box(const Vec& lo, const Vec& hi) {
  const int n = static_cast<int>(lo.size());
  std::vector<Vec> corners;
  for (int mask = 0; mask < (1 << n); ++mask) {
    Vec p(n);
    for (int j = 0; j < n; ++j) {
      p[j] = (mask >> j) & 1 ? hi[j] : lo[j];
    }
    corners.push_back(p);
  }
  return hull_of(corners);
}

void ConvexCell::build_planes() {
  normals_.clear();
  offsets_.clear();
  if (empty_) {
    return;
  }
  if (dim_ == 2) {
    scale_ = point_scale(poly_);
    for (std::size_t i = 0; i < poly_.size(); ++i) {
      const Vec e = poly_[(i + 1) % poly_.size()] - poly_[i];
      Vec nrm(2);
      nrm << e[1], -e[0];
      const double len = nrm.norm();
      if (len > 0.0) {
        nrm /= len;
        normals_.push_back(nrm);
        offsets_.push_back(nrm.dot(poly_[i]));
      }
    }
  } else {
    scale_ = 1e-300;
    for (const auto& f : faces_) {
      scale_ = std::max(scale_, point_scale(f));
      Vec nrm = newell(f);
      const double len = nrm.norm();
      if (len > 0.0) {
        nrm /= len;
        Vec centroid = Vec::Zero(3);
        for (const auto& p : f) {
          centroid += p;
        }
        centroid /= static_cast<double>(f.size());
        normals_.push_back(nrm);
        offsets_.push_back(nrm.dot(centroid));
      }
    }
  }
}

ConvexCell ConvexCell::clip(const Vec& a, double b) const {
  if (empty_) {
    return *this;
  }
  const double anorm = a.norm();
  if (!(anorm > 0.0)) {
    throw InvalidInput("clip normal must be non-zero");
  }
  const double eps = 1e-13 * (scale_ * anorm + std::abs(b));
  auto side = [&](const Vec& p) { return p.dot(a) - b; };

  const std::vector<Vec> verts = vertices();
  bool any_out = false;
  bool any_in = false;
  for (const auto& p : verts) {
    const double s = side(p);
    any_out = any_out || s > eps;
    any_in = any_in || s < -eps;
  }
  if (!any_out) {
    return *this;
  }
  if (!any_in) {
    return {};
  }

  auto clip_loop = [&](const std::vector<Vec>& loop, std::vector<Vec>& kept,
                       std::vector<Vec>& on_plane) {
    const std::size_t m = loop.size();
    for (std::size_t i = 0; i < m; ++i) {
      const Vec& cur = loop[i];
      const Vec& nxt = loop[(i + 1) % m];
      const double sc = side(cur);
      const double sn = side(nxt);
      if (sc <= eps) {
        kept.push_back(cur);
        if (sc >= -eps) {
          on_plane.push_back(cur);
        }
      }
      if ((sc < -eps && sn > eps) || (sc > eps && sn < -eps)) {
        const double t = sc / (sc - sn);
        Vec x = cur + t * (nxt - cur);
        kept.push_back(x);
        on_plane.push_back(x);
      }
    }
  };

  const double tol = 1e-13 * scale_;
  if (dim_ == 2) {
    std::vector<Vec> kept;
    std::vector<Vec> on_plane;
    clip_loop(poly_, kept, on_plane);
    dedupe_loop(kept, tol);
    if (kept.size() < 3) {
      return {};
    }
    return polygon(hull2d(kept));
  }

  std::vector<std::vector<Vec>> faces;
  std::vector<Vec> cap_pts;
  bool face_on_plane = false;
  for (std::size_t f = 0; f < faces_.size(); ++f) {
    std::vector<Vec> kept;
    std::vector<Vec> on_plane;
    clip_loop(faces_[f], kept, on_plane);
    if (on_plane.size() == faces_[f].size() && f < normals_.size() &&
        normals_[f].dot(a) > 0.0) {
      face_on_plane = true;
    }
    dedupe(kept, tol);
    for (auto& p : on_plane) {
      cap_pts.push_back(std::move(p));
    }
    if (kept.size() >= 3) {
      faces.push_back(std::move(kept));
    }
  }
  if (!face_on_plane) {
    dedupe(cap_pts, tol);
    std::vector<Vec> loop = planar_loop(cap_pts, a);
    if (loop.size() >= 3) {
      faces.push_back(std::move(loop));
    }
  }
  if (faces.size() < 4) {
    return {};
  }
  return polyhedron(std::move(faces));
}

std::vector<Vec> ConvexCell::vertices() const {
  if (empty_) {
    return {};
  }
  if (dim_ == 2) {
    return poly_;
  }
  std::vector<Vec> out;
  for (const auto& f : faces_) {
    for (const auto& p : f) {
      out.push_back(p);
    }
  }
  dedupe(out, 1e-13 * scale_);
  return out;
}

double ConvexCell::support(const Vec& theta) const {
  if (empty_) {
    return -std::numeric_limits<double>::infinity();
  }
  double best = -std::numeric_limits<double>::infinity();
  if (dim_ == 2) {
    for (const auto& p : poly_) {
      best = std::max(best, p.dot(theta));
    }
  } else {
    for (const auto& f : faces_) {
      for (const auto& p : f) {
        best = std::max(best, p.dot(theta));
      }
    }
  }
  return best;
}

void ConvexCell::for_each_simplex(
    const std::function<void(const std::vector<Vec>&, double)>& fn) const {
  if (empty_) {
    return;
  }
  if (dim_ == 2) {
    for (std::size_t i = 1; i + 1 < poly_.size(); ++i) {
      const double area = 0.5 * cross2(poly_[i] - poly_[0], poly_[i + 1] - poly_[0]);
      fn({poly_[0], poly_[i], poly_[i + 1]}, area);
    }
    return;
  }
  Vec o = Vec::Zero(3);
  int count = 0;
  for (const auto& f : faces_) {
    for (const auto& p : f) {
      o += p;
      ++count;
    }
  }
  o /= count;
  for (const auto& f : faces_) {
    for (std::size_t i = 1; i + 1 < f.size(); ++i) {
      const double vol = cross3(f[i] - f[0], f[i + 1] - f[0]).dot(f[0] - o) / 6.0;
      fn({o, f[0], f[i], f[i + 1]}, vol);
    }
  }
}

Moments ConvexCell::moments() const {
  Moments acc(dim_);
  for_each_simplex([&](const std::vector<Vec>& v, double vol) { accumulate_simplex(v, vol, acc); });
  return acc;
}

double ConvexCell::volume() const {
  double v = 0.0;
  for_each_simplex([&](const std::vector<Vec>&, double vol) { v += vol; });
  return v;
}

Moments ConvexCell::section(const Vec& a, double b) const {
  Moments acc(dim_);
  if (empty_) {
    return acc;
  }
  const double eps = 1e-13 * (scale_ * a.norm() + std::abs(b));
  auto side = [&](const Vec& p) { return p.dot(a) - b; };
  std::vector<Vec> pts;
  auto scan = [&](const std::vector<Vec>& loop) {
    for (std::size_t i = 0; i < loop.size(); ++i) {
      const Vec& p = loop[i];
      const Vec& q = loop[(i + 1) % loop.size()];
      const double sp = side(p);
      const double sq = side(q);
      if (std::abs(sp) <= eps) {
        pts.push_back(p);
      } else if (std::abs(sq) > eps && sp * sq < 0.0) {
        pts.push_back(p + sp / (sp - sq) * (q - p));
      }
    }
  };
  if (dim_ == 2) {
    scan(poly_);
  } else {
    for (const auto& f : faces_) {
      scan(f);
    }
  }
  dedupe(pts, 1e-13 * scale_);
  if (dim_ == 2) {
    if (pts.size() < 2) {
      return acc;
    }
    // The farthest pair spans the segment.
    std::size_t bi = 0;
    std::size_t bj = 1;
    double best = -1.0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      for (std::size_t j = i + 1; j < pts.size(); ++j) {
        const double d = (pts[i] - pts[j]).norm();
        if (d > best) {
          best = d;
          bi = i;
          bj = j;
        }
      }
    }
    accumulate_simplex({pts[bi], pts[bj]}, best, acc);
    return acc;
  }
  const std::vector<Vec> loop = planar_loop(pts, a);
  for (std::size_t i = 1; i + 1 < loop.size(); ++i) {
    const double area = 0.5 * cross3(loop[i] - loop[0], loop[i + 1] - loop[0]).norm();
    accumulate_simplex({loop[0], loop[i], loop[i + 1]}, area, acc);
  }
  return acc;
}

double ConvexCell::ray_exit(const Vec& origin, const Vec& u) const {
  double r = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < normals_.size(); ++i) {
    const double nu = normals_[i].dot(u);
    if (nu > 0.0) {
      r = std::min(r, (offsets_[i] - normals_[i].dot(origin)) / nu);
    }
  }
  return std::max(r, 0.0);
}

bool ConvexCell::contains(const Vec& x, double tol) const {
  if (empty_) {
    return false;
  }
  for (std::size_t i = 0; i < normals_.size(); ++i) {
    if (normals_[i].dot(x) - offsets_[i] > tol) {
      return false;
    }
  }
  return true;
}

double ConvexCell::distance(const Vec& x) const {
  if (empty_) {
    return std::numeric_limits<double>::infinity();
  }
  if (contains(x, 0.0)) {
    return 0.0;
  }
  double best = std::numeric_limits<double>::infinity();
  if (dim_ == 2) {
    for (std::size_t i = 0; i < poly_.size(); ++i) {
      const Vec& p = poly_[i];
      const Vec e = poly_[(i + 1) % poly_.size()] - p;
      const double len2 = e.squaredNorm();
      const double t = len2 > 0.0 ? std::clamp((x - p).dot(e) / len2, 0.0, 1.0) : 0.0;
      best = std::min(best, (x - p - t * e).norm());
    }
    return best;
  }
  for (const auto& f : faces_) {
    for (std::size_t i = 1; i + 1 < f.size(); ++i) {
      best = std::min(best, point_triangle_distance(x, f[0], f[i], f[i + 1]));
    }
  }
  return best;
}

double point_triangle_distance(const Vec& p, const Vec& a, const Vec& b, const Vec& c) {
  const Vec ab = b - a;
  const Vec ac = c - a;
  const Vec ap = p - a;
  const double d1 = ab.dot(ap);
  const double d2 = ac.dot(ap);
  if (d1 <= 0.0 && d2 <= 0.0) {
    return ap.norm();
  }
  const Vec bp = p - b;
  const double d3 = ab.dot(bp);
  const double d4 = ac.dot(bp);
  if (d3 >= 0.0 && d4 <= d3) {
    return bp.norm();
  }
  const double vc = d1 * d4 - d3 * d2;
  if (vc <= 0.0 && d1 >= 0.0 && d3 <= 0.0) {
    const double v = d1 / (d1 - d3);
    return (p - (a + v * ab)).norm();
  }
  const Vec cp = p - c;
  const double d5 = ab.dot(cp);
  const double d6 = ac.dot(cp);
  if (d6 >= 0.0 && d5 <= d6) {
    return cp.norm();
  }
  const double vb = d5 * d2 - d1 * d6;
  if (vb <= 0.0 && d2 >= 0.0 && d6 <= 0.0) {
    const double w = d2 / (d2 - d6);
    return (p - (a + w * ac)).norm();
  }
  const double va = d3 * d6 - d5 * d4;
  if (va <= 0.0 && (d4 - d3) >= 0.0 && (d5 - d6) >= 0.0) {
    const double w = (d4 - d3) / ((d4 - d3) + (d5 - d6));
    return (p - (b + w * (c - b))).norm();
  }
  const double denom = 1.0 / (va + vb + vc);
  const double v = vb * denom;
  const double w = vc * denom;
  return (p - (a + ab * v + ac * w)).norm();
}

}  // namespace ulamfloat::geom
