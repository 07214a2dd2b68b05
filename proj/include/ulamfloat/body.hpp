// Concrete convex bodies: Euclidean balls, ellipsoids and V-polytopes in the plane and space.
#pragma once

#include "ulamfloat/core.hpp"
#include "ulamfloat/geometry.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ulamfloat {

enum class BodyKind { Ball, Ellipsoid, Polytope };

std::string to_string(BodyKind kind);

/// Outward facet of a polytope: unit normal, offset (<x, normal> <= offset) and the
/// counter-clockwise vertex loop (a vertex pair in the plane).
struct Facet {
  Vec normal;
  double offset;
  std::vector<int> loop;
};

/// Sample of the boundary surface measure.
struct BoundarySample {
  Vec x;
  Vec normal;
  double weight;
  /// Weight of the sample in the embedded coarser rule; 0 when it is not a node there.
  double coarse_weight;
  double curvature;
  double support_number;  ///< <x, N(x)>
  bool smooth;
};

struct BoundaryRule {
  std::vector<BoundarySample> samples;
  /// True when coarse_weight defines an embedded rule usable as an error estimate.
  bool has_coarse = false;
};

/// Immutable convex body. Balls and ellipsoids live in any dimension n >= 2 (analytic
/// queries are designed for n <= 10); polytopes in n in {2, 3}.
class Body {
 public:
  static Body ball(Vec center, double radius);
  /// {x : (x - c)^T A (x - c) <= 1}
  static Body ellipsoid(Vec center, Mat shape);
  /// Convex hull of the given points; redundant points are discarded.
  static Body polytope(const std::vector<Vec>& points);

  BodyKind kind() const { return kind_; }
  int dim() const { return dim_; }
  bool is_smooth() const { return kind_ != BodyKind::Polytope; }

  const Vec& center() const { return center_; }
  const Mat& shape() const { return shape_; }
  /// Symmetric square root L of A^{-1}: the body is c + L B.
  const Mat& half_axes() const { return half_axes_; }
  double half_axes_det() const { return half_axes_det_; }
  double radius() const;

  const std::vector<Vec>& vertices() const { return vertices_; }
  const std::vector<Facet>& facets() const { return facets_; }
  const geom::ConvexCell& cell() const { return cell_; }

  double support(const Vec& theta) const;
  double support(const Direction& theta) const { return support(theta.vec()); }
  Vec support_point(const Vec& theta) const;
  bool contains(const Vec& x, double tol = 0.0) const;

  double volume() const { return volume_; }
  const Vec& barycenter() const { return barycenter_; }
  double diameter() const { return diameter_; }
  /// Chebyshev (inradius) center and inradius.
  const Vec& interior_point() const { return interior_point_; }
  double inradius() const { return inradius_; }
  /// Translation applied by recentered()/normalized() relative to the user's input.
  const Vec& offset() const { return offset_; }

  /// T(body); balls become ellipsoids unless T is a multiple of an orthogonal map.
  Body apply_linear(const Mat& t) const;
  Body translated(const Vec& v) const;
  /// Translate so the Chebyshev center sits at the origin.
  Body recentered() const;
  /// Scale to volume 1 and translate the barycenter to the origin.
  Body normalized() const;

  /// Whether the origin lies in the interior of the body.
  bool origin_interior() const;
  /// Radial function: largest r with r*u in the body; requires an interior origin.
  double radial(const Vec& u) const;

  /// Gaussian curvature at a boundary point; nullopt on the non-smooth skeleton.
  std::optional<double> gaussian_curvature(const Vec& x) const;
  /// Outer unit normal at a boundary point (any outer normal on the skeleton).
  Vec outer_normal(const Vec& x) const;

  /// Samples of the boundary surface measure. For smooth bodies the rule is the
  /// sphere quadrature of the given resolution pulled back to the boundary; for polytopes
  /// a composite Gauss-Kronrod rule graded toward the vertices (n = 2) or subdivided
  /// facet triangles (n = 3).
  BoundaryRule boundary_quadrature(int resolution) const;

  std::string describe() const;

 private:
  Body() = default;
  void finish();

  BodyKind kind_ = BodyKind::Ball;
  int dim_ = 0;
  Vec center_;
  Mat shape_;
  Mat half_axes_;
  double half_axes_det_ = 1.0;
  double radius_ = 0.0;
  std::vector<Vec> vertices_;
  std::vector<Facet> facets_;
  geom::ConvexCell cell_;
  double volume_ = 0.0;
  Vec barycenter_;
  double diameter_ = 0.0;
  Vec interior_point_;
  double inradius_ = 0.0;
  Vec offset_;
};

}  // namespace ulamfloat
