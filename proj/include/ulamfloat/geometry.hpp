// Exact convex geometry in two and three dimensions: hulls, halfspace clipping,
// hyperplane sections and polynomial moments.
#pragma once

#include "ulamfloat/core.hpp"

#include <array>
#include <functional>
#include <vector>

namespace ulamfloat::geom {

/// Zeroth, first and second moments of a measure on R^n.
struct Moments {
  double m0 = 0.0;
  Vec m1;
  Mat m2;

  explicit Moments(int n = 0) : m1(Vec::Zero(n)), m2(Mat::Zero(n, n)) {}
  Vec centroid() const { return m1 / m0; }
};

/// Adds the moments of the k-simplex spanned by `v` (k+1 points) with k-dimensional
/// measure `measure` to `acc`.
void accumulate_simplex(const std::vector<Vec>& v, double measure, Moments& acc);

/// Planar convex hull in counter-clockwise order without collinear vertices.
std::vector<Vec> hull2d(std::vector<Vec> pts);

/// Indices into `pts` of the extreme points of their planar hull, counter-clockwise.
std::vector<int> hull2d_indices(const std::vector<Vec>& pts);

/// Triangulated 3D hull; each triangle is oriented with its normal pointing outward.
/// Throws InvalidInput when the points are affinely dependent.
std::vector<std::array<int, 3>> hull3d(const std::vector<Vec>& pts);

/// Facet of a 3D hull: outward unit normal, offset and counter-clockwise vertex indices.
struct HullFacet {
  Vec normal;
  double offset;
  std::vector<int> loop;
};

/// Merges coplanar triangles of `hull3d` into polygonal facets with collinear
/// vertices removed.
std::vector<HullFacet> hull3d_facets(const std::vector<Vec>& pts);

/// A bounded convex polygon (dim 2) or polyhedron (dim 3), possibly empty.
class ConvexCell {
 public:
  ConvexCell() = default;

  static ConvexCell polygon(std::vector<Vec> ccw);
  static ConvexCell polyhedron(std::vector<std::vector<Vec>> faces);
  static ConvexCell hull_of(const std::vector<Vec>& pts);
  static ConvexCell box(const Vec& lo, const Vec& hi);
  /// Bounded intersection of the planar halfplanes {<x, a_i> <= b_i}, in O(k log k);
  /// empty when the intersection is empty, degenerate or unbounded.
  static ConvexCell halfplanes(const std::vector<Vec>& normals, const std::vector<double>& offsets);

  int dim() const { return dim_; }
  bool empty() const { return empty_; }

  /// Intersection with the halfspace {<x, a> <= b}.
  ConvexCell clip(const Vec& a, double b) const;

  std::vector<Vec> vertices() const;
  double support(const Vec& theta) const;
  Moments moments() const;
  double volume() const;

  /// Moments of the (n-1)-dimensional section {<x, a> = b}, measured by Hausdorff measure.
  Moments section(const Vec& a, double b) const;

  /// Calls f(vertices, measure) for a triangulation of the cell.
  void for_each_simplex(const std::function<void(const std::vector<Vec>&, double)>& f) const;

  /// Largest r >= 0 with origin + r*u in the cell; `origin` must lie in the cell.
  double ray_exit(const Vec& origin, const Vec& u) const;

  bool contains(const Vec& x, double tol = 0.0) const;

  /// Euclidean distance from x to the cell (0 when x lies inside).
  double distance(const Vec& x) const;

  const std::vector<Vec>& polygon_vertices() const { return poly_; }
  const std::vector<std::vector<Vec>>& faces() const { return faces_; }
  const std::vector<Vec>& plane_normals() const { return normals_; }
  const std::vector<double>& plane_offsets() const { return offsets_; }

 private:
  void build_planes();

  int dim_ = 0;
  bool empty_ = true;
  std::vector<Vec> poly_;
  std::vector<std::vector<Vec>> faces_;
  std::vector<Vec> normals_;
  std::vector<double> offsets_;
  double scale_ = 1.0;
};

/// Closest-point distance from p to the triangle (a, b, c) in R^3.
double point_triangle_distance(const Vec& p, const Vec& a, const Vec& b, const Vec& c);

}  // namespace ulamfloat::geom
