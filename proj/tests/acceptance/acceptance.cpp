// Acceptance suite: one PASS/FAIL line per criterion.
#include "ulamfloat/asa.hpp"
#include "ulamfloat/cap_calculus.hpp"
#include "ulamfloat/centroid.hpp"
#include "ulamfloat/checks.hpp"
#include "ulamfloat/floatsim.hpp"
#include "ulamfloat/random.hpp"
#include "ulamfloat/sphere.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

using namespace ulamfloat;

namespace {

constexpr double kPi = std::numbers::pi;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  int assertions = 0;

  void expect(bool ok, const std::string& what) {
    ++assertions;
    if (!ok) {
      if (pass) {
        detail << " first failure: " << what << ";";
      }
      pass = false;
    }
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

Vec v2(double a, double b) {
  Vec v(2);
  v << a, b;
  return v;
}

Vec v3(double a, double b, double c) {
  Vec v(3);
  v << a, b, c;
  return v;
}

Body disc() { return Body::ball(Vec::Zero(2), 1.0); }

Body centered_square() {
  return Body::polytope({v2(-0.5, -0.5), v2(0.5, -0.5), v2(0.5, 0.5), v2(-0.5, 0.5)});
}

Body triangle() { return Body::polytope({v2(0.0, 0.0), v2(1.0, 0.0), v2(0.2, 0.9)}); }

Body ellipse() {
  Mat a(2, 2);
  a << 1.0, 0.2, 0.2, 0.3;
  return Body::ellipsoid(v2(0.1, -0.2), a);
}

Body cube() {
  std::vector<Vec> pts;
  for (int i = 0; i < 8; ++i) {
    pts.push_back(v3(i & 1 ? 0.5 : -0.5, i & 2 ? 0.5 : -0.5, i & 4 ? 0.5 : -0.5));
  }
  return Body::polytope(pts);
}

Body tetrahedron() {
  return Body::polytope({v3(1, 1, 1), v3(1, -1, -1), v3(-1, 1, -1), v3(-1, -1, 1)});
}

// 1. Delta(1, delta) / delta^{2/3} on the unit disc.
void ball_shrinkage_asymptotics(Outcome& o) {
  const auto t0 = Clock::now();
  const double c2 = 0.5 * (3.0 / 5.0) * std::pow(1.5, 2.0 / 3.0);
  const double r6 = ball_shrinkage(2, 1.0, 1e-6) / std::pow(1e-6, 2.0 / 3.0);
  const double r8 = ball_shrinkage(2, 1.0, 1e-8) / std::pow(1e-8, 2.0 / 3.0);
  const double elapsed = seconds_since(t0);
  o.detail << "r(1e-6)=" << r6 << " r(1e-8)=" << r8 << " c=" << c2 << " t=" << elapsed << "s;";
  o.expect(std::abs(r6 / c2 - 1.0) <= 0.01, "r(1e-6) within 1%");
  o.expect(std::abs(r8 / c2 - 1.0) <= 0.01, "r(1e-8) within 1%");
  o.expect(r6 > r8 && r8 > c2, "monotone approach from above");
  o.expect(std::abs(r8 - c2) < std::abs(r6 - c2), "closer at smaller delta");
  o.expect(std::abs(r6 / 0.3931130488801178 - 1.0) <= 1e-9, "oracle ratio at 1e-6");
  o.expect(std::abs(r8 / 0.3931112945236044 - 1.0) <= 1e-9, "oracle ratio at 1e-8");
  o.expect(elapsed < 1.0, "runtime below 1 s");
}

// 2. Which constant expression matches the disc limit.
void constant_resolution(Outcome& o) {
  const ConstantResolution r = resolve_constant(2);
  o.detail << "limit=" << r.limit << " c_prop=" << r.c_proposition << " c_alt=" << r.c_theorem
           << " mismatch=" << r.mismatch << " matched=" << r.matched << ";";
  o.expect(r.proposition_matches != r.theorem_matches, "exactly one expression matches");
  o.expect(std::abs(r.mismatch - 2.3295479059634637) <= 1e-12, "mismatch factor");
}

double disc_limit_extrapolated = 0.0;
double disc_limit_uncertainty = 0.0;

LimitOptions disc_schedule() {
  LimitOptions opts;
  opts.delta0 = 1e-2;
  opts.steps = 8;
  opts.m = 2048;
  return opts;
}

// 3. Volume-defect limit on the disc with constant weight.
void main_theorem_disc(Outcome& o) {
  const auto t0 = Clock::now();
  const ExperimentRecord rec = limit_experiment(disc(), Weight::constant(1.0), disc_schedule());
  const double elapsed = seconds_since(t0);
  const double target = validated_c_n(2) * 2.0 * kPi;
  disc_limit_extrapolated = rec.extrapolated;
  disc_limit_uncertainty = rec.uncertainty;
  o.detail << "extrapolated=" << rec.extrapolated << " +- " << rec.uncertainty
           << " target=" << target << " smallest delta=" << rec.rows.back().delta
           << " t=" << elapsed << "s;";
  o.expect(rec.rows.back().delta <= 1e-6, "schedule reaches 1e-6");
  o.expect(std::abs(rec.extrapolated / target - 1.0) <= 0.02, "within 2% of c_2 2 pi");
  o.expect(std::abs(rec.reference / target - 1.0) <= 1e-7, "reference integral");
  o.expect(rec.monotone, "monotone ratios");
  o.expect(elapsed < 60.0, "runtime below 1 min");
}

// 4. phi_p weights on the disc against c_2 as_p.
void pasa_smoke(Outcome& o) {
  for (double p : {2.0, 1.0}) {
    const ExperimentRecord rec = corollary_pasa_experiment(disc(), p, disc_schedule());
    const double target = validated_c_n(2) * asa_p_ball(2, 1.0, p);
    o.detail << " p=" << p << ": " << rec.extrapolated << " vs " << target << ";";
    o.expect(std::abs(rec.extrapolated / target - 1.0) <= 0.03, "within 3% of c_2 as_p");
    o.expect(std::abs(rec.reference / target - 1.0) <= 1e-7, "as_p quadrature vs closed form");
    if (p == 1.0) {
      o.expect(std::abs(rec.extrapolated - disc_limit_extrapolated) <=
                   std::max(1e-9, rec.uncertainty + disc_limit_uncertainty),
               "p = 1 coincides with the constant-weight run");
    }
  }
}

// 5. F_{(1-1/e)delta} ⊆ M_delta ⊆ F_{delta/e} on twelve instances.
void sandwich(Outcome& o) {
  const auto t0 = Clock::now();
  const std::vector<std::pair<std::string, Body>> bodies{
      {"disc", disc()},    {"square", centered_square()}, {"triangle", triangle()},
      {"ellipse", ellipse()}, {"cube", cube()},           {"tetrahedron", tetrahedron()}};
  int instances = 0;
  for (const auto& [name, body] : bodies) {
    for (int wi = 0; wi < 2; ++wi) {
      const Weight w = wi == 0 ? Weight::constant(1.0)
                               : Weight::gaussian(Vec::Zero(body.dim()), 1.0);
      const double total = total_mass(w, body).value;
      for (double frac : {0.02, 0.05}) {
        const auto r = sandwich_check(body, w, frac * total, 512);
        o.expect(r.passed, name + (wi ? " gaussian" : " constant") + " delta " +
                               std::to_string(frac) + " margins " +
                               std::to_string(r.left_margin) + " " +
                               std::to_string(r.right_margin));
      }
      ++instances;
    }
  }
  const double elapsed = seconds_since(t0);
  o.detail << "instances=" << instances << " t=" << elapsed << "s;";
  o.expect(elapsed < 300.0, "runtime below 5 min");
}

// 6. Symmetry identities on volume-one triangle and square.
void symmetry(Outcome& o) {
  for (const auto& [name, body] :
       std::vector<std::pair<std::string, Body>>{{"triangle", triangle().normalized()},
                                                 {"square", centered_square().normalized()}}) {
    for (double delta : {0.1, 0.3, 0.5}) {
      const auto r = symmetry_check(body, delta, 512);
      o.expect(r.passed, name + " delta " + std::to_string(delta));
      o.detail << " " << name << "(" << delta << "): " << r.identity_deviation << "/"
               << r.central_deviation << "/" << r.archimedes_deviation << ";";
    }
  }
}

// 7. Volume-difference brackets.
void volume_difference_brackets(Outcome& o) {
  {
    const Body k = disc();
    const Body l = Body::ball(Vec::Zero(2), 0.9);
    const auto vd = volume_difference(
        k, [&](const Vec& x) { const double r = l.radial(x); return RadialBracket{r, r}; }, 256);
    const double exact = kPi * (1.0 - 0.81);
    o.expect(vd.lo <= exact && exact <= vd.hi, "ball/ball bracket");
    o.detail << " ball/ball [" << vd.lo << "," << vd.hi << "] exact " << exact << ";";
  }
  {
    const Body k = Body::polytope({v2(-1, -1), v2(1, -1), v2(1, 1), v2(-1, 1)});
    const Body l = centered_square();
    const auto vd = volume_difference(
        k, [&](const Vec& x) { const double r = l.radial(x); return RadialBracket{r, r}; }, 24);
    o.expect(vd.lo <= 3.0 && 3.0 <= vd.hi, "square/square bracket");
    o.detail << " square/square [" << vd.lo << "," << vd.hi << "];";
  }
  {
    const Body k = disc();
    const auto approx = build_ulam_body(k, Weight::constant(1.0), 0.1, 2048);
    const auto vd = volume_difference(k, approx, 256);
    const double d = ball_shrinkage(2, 1.0, 0.1);
    const double exact = kPi - kPi * (1.0 - d) * (1.0 - d);
    o.expect(std::abs(d - 0.0855781291211002) <= 1e-13, "Delta(1, 0.1) oracle");
    o.expect(vd.lo <= exact && exact <= vd.hi, "disc / M_0.1 bracket contains exact value");
    o.expect(vd.hi - vd.lo <= 1e-4, "bracket width below 1e-4");
    o.detail << " disc/M_0.1 [" << vd.lo << "," << vd.hi << "] exact " << exact << ";";
  }
}

// 8. Gradient formulas against finite differences and closed forms.
void gradient_formulas(Outcome& o) {
  Mat a3(3, 3);
  a3 << 1.0, 0.3, 0.1, 0.3, 2.0, -0.2, 0.1, -0.2, 0.7;
  const std::vector<std::pair<std::string, Body>> classes{
      {"disc", disc()},
      {"ball3", Body::ball(Vec::Zero(3), 1.0)},
      {"ellipse", ellipse()},
      {"ellipsoid", Body::ellipsoid(v3(0.1, 0.0, -0.1), a3)},
      {"square", centered_square()},
      {"triangle", triangle()},
      {"cube", cube()},
      {"tetrahedron", tetrahedron()}};
  std::uint64_t seed = 7;
  for (const auto& [name, body] : classes) {
    const auto s = grad_check(body, 20, seed++);
    o.expect(s.samples == 20 && s.passed(), name + " finite differences");
    o.detail << " " << name << ": " << s.max_grad_deviation << "/" << s.max_jac_deviation << ";";
  }
  const Vec g3 = grad_delta(Body::ball(Vec::Zero(3), 1.0), v3(0, 0, 2));
  o.expect((g3 - v3(0, 0, 3.0 * kPi / 16.0)).norm() <= 1e-12, "n=3 closed form 3 pi/16 e3");
  const Vec g2 = grad_delta(disc(), v2(0, 2));
  o.expect((g2 - v2(0, std::sqrt(3.0) / 4.0)).norm() <= 1e-12, "n=2 closed form sqrt3/4 e2");
}

// 9. K_delta ⊆ M_delta ⊆ e Z_{log 1/delta} and the cube Z_p closed forms.
void zp_sandwich(Outcome& o) {
  for (const auto& [name, body] : std::vector<std::pair<std::string, Body>>{
           {"disc", disc().normalized()}, {"cube", cube()}}) {
    for (double delta : {0.05, 0.1, 0.3}) {
      const auto r = zp_sandwich_check(body, delta, 512);
      o.expect(r.passed, name + " delta " + std::to_string(delta));
      o.detail << " " << name << "(" << delta << "): " << r.left_margin << "/" << r.right_margin
               << ";";
    }
  }
  const Direction e1 = Direction::axis(3, 0);
  o.expect(std::abs(zp_support(cube(), 1.0, e1).h - 0.25) <= 1e-6, "cube Z_1 = 1/4");
  o.expect(std::abs(zp_support(cube(), 2.0, e1).h - 1.0 / (2.0 * std::sqrt(3.0))) <= 1e-6,
           "cube Z_2 = 1/(2 sqrt 3)");
}

// 10. Ratios decrease on the square.
void polytope_flatness(Outcome& o) {
  const ExperimentRecord rec =
      limit_experiment(centered_square(), Weight::constant(1.0), disc_schedule());
  for (std::size_t k = 0; k < rec.rows.size(); ++k) {
    o.detail << " " << 0.5 * (rec.rows[k].ratio_lo + rec.rows[k].ratio_hi);
    if (k > 0) {
      o.expect(rec.rows[k].ratio_hi < rec.rows[k - 1].ratio_lo,
               "r_" + std::to_string(k) + " < r_" + std::to_string(k - 1));
    }
  }
  o.detail << " reference=" << rec.reference << ";";
  o.expect(rec.reference == 0.0, "zero curvature reference");
}

// 11. Property suites over a randomized corpus.
Body random_polygon(Rng& rng) {
  std::vector<Vec> pts;
  for (int i = 0; i < 7; ++i) {
    pts.push_back(v2(rng.uniform(-1, 1), rng.uniform(-1, 1)));
  }
  return Body::polytope(pts);
}

Body random_polytope3(Rng& rng) {
  std::vector<Vec> pts;
  for (int i = 0; i < 9; ++i) {
    pts.push_back(v3(rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)));
  }
  return Body::polytope(pts);
}

Body random_ellipsoid(Rng& rng, int n) {
  Mat b(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      b(i, j) = rng.uniform(-1, 1);
    }
  }
  const Mat a = b * b.transpose() + 0.5 * Mat::Identity(n, n);
  return Body::ellipsoid(0.2 * rng.normal_vec(n), a);
}

Mat random_unimodular(Rng& rng, int n) {
  Mat t(n, n);
  do {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        t(i, j) = rng.uniform(-1, 1) + (i == j ? 1.5 : 0.0);
      }
    }
  } while (std::abs(t.determinant()) < 0.2);
  const double det = t.determinant();
  if (det < 0) {
    t.col(0) *= -1.0;
  }
  return t / std::pow(std::abs(det), 1.0 / n);
}

void property_suites(Outcome& o) {
  Rng rng(stream_seed(20240611, 0));
  std::vector<Body> corpus;
  for (int i = 0; i < 4; ++i) {
    corpus.push_back(random_polygon(rng));
    corpus.push_back(random_ellipsoid(rng, 2));
    corpus.push_back(random_polytope3(rng));
    corpus.push_back(random_ellipsoid(rng, 3));
  }
  const double tol = 1e-9;
  int violations = 0;
  auto check = [&](bool ok, const std::string& what) {
    o.expect(ok, what);
    violations += ok ? 0 : 1;
  };
  for (std::size_t bi = 0; bi < corpus.size(); ++bi) {
    const Body& body = corpus[bi];
    const int n = body.dim();
    const std::string tag = "body " + std::to_string(bi);
    const Weight one = Weight::constant(1.0);
    const double vol = body.volume();
    const double scale = body.diameter();
    const auto dirs = direction_grid(n, n == 2 ? 16 : 14);
    // Monotone nesting in delta.
    for (const auto& th : dirs) {
      const double h1 = ulam_support(body, one, th, 0.05 * vol).h;
      const double h2 = ulam_support(body, one, th, 0.2 * vol).h;
      const double h3 = ulam_support(body, one, th, 0.4 * vol).h;
      check(h1 > h2 - tol * scale && h2 > h3 - tol * scale, tag + " nesting");
    }
    // Strict convexity proxy.
    const auto approx = build_ulam_body(body, one, 0.1 * vol, n == 2 ? 64 : 62);
    check(strict_convexity_violations(approx, 1e-12 * scale) == 0, tag + " strict convexity");
    // Equivariance under a volume-preserving linear map.
    const Mat t = random_unimodular(rng, n);
    const Body tk = body.apply_linear(t);
    const Mat tinv_t = t.inverse().transpose();
    for (int k = 0; k < 3; ++k) {
      const Direction th = rng.direction(n);
      const Direction th2(tinv_t * th.vec());
      const Vec lhs = ulam_support(tk, one, th2, 0.15 * vol).x;
      const Vec rhs = t * ulam_support(body, one, th, 0.15 * vol).x;
      check((lhs - rhs).norm() <= 1e-8 * scale, tag + " equivariance");
    }
    // Translation covariance.
    const Vec v = rng.normal_vec(n);
    const Body moved = body.translated(v);
    for (int k = 0; k < 3; ++k) {
      const Direction th = rng.direction(n);
      const Vec lhs = ulam_support(moved, one, th, 0.15 * vol).x;
      const Vec rhs = ulam_support(body, one, th, 0.15 * vol).x + v;
      check((lhs - rhs).norm() <= 1e-8 * scale, tag + " translation");
    }
    // Scaling law M_{lambda^n delta}(lambda K) = lambda M_delta(K).
    const double lambda = rng.uniform(0.5, 2.0);
    const Body scaled = body.apply_linear(lambda * Mat::Identity(n, n));
    for (int k = 0; k < 3; ++k) {
      const Direction th = rng.direction(n);
      const Vec lhs = ulam_support(scaled, one, th, std::pow(lambda, n) * 0.15 * vol).x;
      const Vec rhs = lambda * ulam_support(body, one, th, 0.15 * vol).x;
      check((lhs - rhs).norm() <= 1e-8 * scale * lambda, tag + " scaling");
    }
    // Cap mass through the barycenter lies in [1/e, 1 - 1/e] of the total.
    for (int wi = 0; wi < 2; ++wi) {
      const Weight w = wi == 0 ? one : Weight::gaussian(0.3 * rng.normal_vec(n), 0.8);
      const double total = total_mass(w, body).value;
      const Direction e0 = Direction::axis(n, 0);
      const Vec g = cap_moments(body, w, e0, -body.support(-e0)).first / total;
      for (int k = 0; k < 3; ++k) {
        const Direction th = rng.direction(n);
        const double frac = cap_mass(body, w, th, th.dot(g)) / total;
        check(frac >= std::exp(-1.0) - 1e-9 && frac <= 1.0 - std::exp(-1.0) + 1e-9,
              tag + " Grunbaum bound " + std::to_string(frac));
      }
    }
  }
  o.detail << "assertions=" << o.assertions << " violations=" << violations << ";";
  o.expect(o.assertions >= 200, "at least 200 assertions");
}

// 12. Flotation.
void flotation(Outcome& o) {
  const auto disc_eq = equilibrium_directions(disc(), 0.5, 720);
  o.expect(disc_eq.every_position && disc_eq.max_abs_torque <= 1e-12, "disc floats everywhere");
  const auto sq = equilibrium_directions(centered_square(), 0.5, 720);
  o.expect(!sq.every_position && sq.angles.size() == 8, "square has 8 equilibria");
  o.detail << "disc max torque=" << disc_eq.max_abs_torque << " square equilibria="
           << sq.angles.size() << ";";
  double worst = 0.0;
  for (const Body& body : {centered_square(), triangle().normalized(), ellipse().normalized()}) {
    for (int i = 0; i < 256; ++i) {
      worst = std::max(worst, collinearity_deviation(body, 0.5, 2.0 * kPi * i / 256));
    }
  }
  o.detail << " collinearity=" << worst << ";";
  o.expect(worst <= 1e-10, "collinearity across 256 directions");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
      {"ball shrinkage asymptotics", ball_shrinkage_asymptotics},
      {"constant resolution", constant_resolution},
      {"volume-defect limit on the disc", main_theorem_disc},
      {"phi_p limit on the disc", pasa_smoke},
      {"floating-body sandwich", sandwich},
      {"symmetry identities", symmetry},
      {"volume-difference brackets", volume_difference_brackets},
      {"gradient formulas", gradient_formulas},
      {"centroid-body sandwich", zp_sandwich},
      {"polytope flatness", polytope_flatness},
      {"property suites", property_suites},
      {"flotation", flotation}};
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    const auto t0 = Clock::now();
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << " exception: " << e.what();
    }
    const double elapsed = seconds_since(t0);
    failures += o.pass ? 0 : 1;
    std::printf("%s criterion %zu (%s) [%.1fs]: %s\n", o.pass ? "PASS" : "FAIL", i + 1,
                criteria[i].first.c_str(), elapsed, o.detail.str().c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
