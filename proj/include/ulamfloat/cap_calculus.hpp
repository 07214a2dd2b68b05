// The cap functionals delta(a) = |K ∩ {<x,a> >= 1}| and U(a) = int_{K ∩ {<x,a> >= 1}} x dx,
// their derivatives as hyperplane-section moments, and finite-difference checks.
#pragma once

#include "ulamfloat/body.hpp"
#include "ulamfloat/geometry.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace ulamfloat {

/// Whether the hyperplane {<x,a> = 1} meets the interior of K.
bool hyperplane_meets_interior(const Body& body, const Vec& a);

/// Moments of the section K ∩ {<x,a> = 1} under the (n-1)-dimensional Hausdorff measure.
geom::Moments section_moments(const Body& body, const Vec& a);

/// delta(a): volume of the cap.
double cap_delta(const Body& body, const Vec& a);
/// U(a): first moment of the cap.
Vec cap_U(const Body& body, const Vec& a);
/// grad delta(a) = (1/|a|) int_section x.
Vec grad_delta(const Body& body, const Vec& a);
/// DU(a) = (1/|a|) int_section x x^T.
Mat jac_U(const Body& body, const Vec& a);

/// int_section |x|^2 by direct quadrature over the section (independent of section_moments).
double section_norm2_quadrature(const Body& body, const Vec& a);

struct FdReport {
  Vec a;
  double grad_deviation = 0.0;
  double jac_deviation = 0.0;
  double grad_tolerance = 0.0;
  double jac_tolerance = 0.0;
  double trace_deviation = 0.0;
  double trace_tolerance = 0.0;
  bool passed = false;
};

/// Central finite differences with step rel_step |a| against the section formulas, and
/// trace DU = (1/|a|) int_section |x|^2.
FdReport fd_check(const Body& body, const Vec& a, double rel_step = 1e-5);

struct GradCheckSummary {
  int samples = 0;
  int failures = 0;
  double max_grad_deviation = 0.0;
  double max_jac_deviation = 0.0;
  double max_trace_deviation = 0.0;
  std::vector<FdReport> reports;
  bool passed() const { return failures == 0; }
};

/// Random a with {<x,a> = 1} meeting int K away from the vertices of polytopes.
std::vector<Vec> random_cap_vectors(const Body& body, int count, std::uint64_t seed);

GradCheckSummary grad_check(const Body& body, int samples, std::uint64_t seed);

/// Barycenter of the volume cap of mass delta in direction theta as U(a)/delta(a) with
/// a = theta/d. When d <= 0 the body is translated along theta first.
Vec barycenter_via_U(const Body& body, const Direction& theta, double delta);

}  // namespace ulamfloat
