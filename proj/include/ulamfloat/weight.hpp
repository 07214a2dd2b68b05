// Positive continuous weights on a convex body.
#pragma once

#include "ulamfloat/body.hpp"

#include <functional>
#include <memory>
#include <optional>
#include <string>

namespace ulamfloat {

enum class WeightKind { Constant, Gaussian, PhiP, Affine };

/// How phi_p is continued from the boundary into the interior.
enum class PhiExtension {
  Radial,  ///< constant along rays from the host's interior center
  Collar   ///< boundary value in an outer collar, linear blend to 1 at the center
};

/// Exponent pair (a, b) with phi_p = <x,N>^a / kappa^b; p may be +-infinity.
std::pair<double, double> phi_p_exponents(int n, double p);

/// phi_p evaluated from the boundary data <x, N(x)> and kappa(x).
double phi_p_boundary_value(int n, double p, double support_number, double curvature);

class Weight {
 public:
  static Weight constant(double s);
  /// exp(-|x - c|^2 / (2 sigma^2)), times `scale`.
  static Weight gaussian(Vec center, double sigma, double scale = 1.0);
  /// Curvature weight phi_p for a smooth host body with the origin in its interior.
  static Weight phi_p(double p, const Body& host, PhiExtension ext = PhiExtension::Radial,
                      double collar = 0.1);

  /// s * phi.
  Weight scaled(double s) const;
  /// phi o T^{-1} for the affine map x -> T x + v.
  Weight pushed_forward(const Mat& t, const Vec& v) const;

  double operator()(const Vec& x) const;

  WeightKind kind() const { return kind_; }
  /// Declared log-concavity: true for constant and gaussian weights and their affine images.
  bool is_log_concave() const { return log_concave_; }
  /// Value of the weight when it is constant on its host body.
  std::optional<double> constant_value() const { return constant_; }
  const std::string& id() const { return id_; }
  /// Dimension the weight expects, or 0 for dimension-free constants.
  int dim() const { return dim_; }

 private:
  Weight() = default;

  WeightKind kind_ = WeightKind::Constant;
  std::function<double(const Vec&)> eval_;
  std::optional<double> constant_;
  bool log_concave_ = true;
  std::string id_;
  int dim_ = 0;
};

}  // namespace ulamfloat
