// Basic vocabulary types shared by every ulamfloat module.
#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace ulamfloat {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

/// Raised when an input violates an operation's precondition.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a numerical procedure cannot deliver its contract.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A unit vector in R^n. Construction normalizes; zero or non-finite input is rejected.
class Direction {
 public:
  explicit Direction(Vec v) : v_(std::move(v)) {
    const double norm = v_.norm();
    if (!(norm > 0.0) || !std::isfinite(norm)) {
      throw InvalidInput("direction must be a non-zero finite vector");
    }
    v_ /= norm;
  }

  static Direction axis(int dim, int k) { return Direction(Vec::Unit(dim, k)); }

  /// Unit vector at angle `alpha` in the plane.
  static Direction planar(double alpha) {
    Vec v(2);
    v << std::cos(alpha), std::sin(alpha);
    return Direction(std::move(v));
  }

  const Vec& vec() const { return v_; }
  int dim() const { return static_cast<int>(v_.size()); }
  double dot(const Vec& x) const { return v_.dot(x); }
  double operator[](int i) const { return v_[i]; }

  Direction operator-() const { return Direction(-v_); }

 private:
  Vec v_;
};

/// Volume of the Euclidean unit ball in R^n (n >= 0).
inline double unit_ball_volume(int n) {
  return std::pow(std::numbers::pi, 0.5 * n) / std::tgamma(0.5 * n + 1.0);
}

/// Surface area of the unit sphere S^{n-1} in R^n.
inline double unit_sphere_area(int n) { return n * unit_ball_volume(n); }

inline double cross2(const Vec& a, const Vec& b) { return a[0] * b[1] - a[1] * b[0]; }

/// Orthonormal basis of the complement of `theta`, as the columns of an n x (n-1) matrix.
Mat orthonormal_complement(const Direction& theta);

}  // namespace ulamfloat
