#include "ulamfloat/quadrature.hpp"

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <map>
#include <memory>
#include <mutex>

namespace ulamfloat::quad {

namespace {

Rule compute_gauss_legendre(int n) {
  Rule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      const double pn = n == 0 ? 1.0 : p1;
      const double pnm1 = n == 1 ? 1.0 : p0;
      dp = n * (x * pn - pnm1) / (x * x - 1.0);
      const double dx = pn / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) {
        break;
      }
    }
    // Recompute the derivative at the converged node.
    double p0 = 1.0;
    double p1 = x;
    for (int k = 2; k <= n; ++k) {
      const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    dp = n * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  return rule;
}

using GK = boost::math::quadrature::gauss_kronrod<double, 15>;
using G7 = boost::math::quadrature::gauss<double, 7>;

struct Panel {
  Vec kronrod;
  double error;
};

Panel gk15_panel(const std::function<Vec(double)>& f, double a, double b, int& evaluations) {
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  const auto& xs = GK::abscissa();
  const auto& wk = GK::weights();
  const auto& wg = G7::weights();

  Vec fc = f(mid);
  Vec kron = fc * wk[0];
  Vec gauss = fc * wg[0];
  evaluations += 1;
  for (std::size_t i = 1; i < xs.size(); ++i) {
    const Vec fp = f(mid + half * xs[i]);
    const Vec fm = f(mid - half * xs[i]);
    evaluations += 2;
    const Vec sum = fp + fm;
    kron += sum * wk[i];
    if (i % 2 == 0) {
      gauss += sum * wg[i / 2];
    }
  }
  kron *= half;
  gauss *= half;
  return {kron, (kron - gauss).cwiseAbs().maxCoeff()};
}

void adaptive_recurse(const std::function<Vec(double)>& f, double a, double b, const Panel& panel,
                      double tol, int depth, int max_depth, AdaptiveResult& out) {
  if (panel.error <= tol || depth >= max_depth || !(b - a > 0.0)) {
    out.value += panel.kronrod;
    out.error += panel.error;
    return;
  }
  const double mid = 0.5 * (a + b);
  const Panel left = gk15_panel(f, a, mid, out.evaluations);
  const Panel right = gk15_panel(f, mid, b, out.evaluations);
  adaptive_recurse(f, a, mid, left, 0.5 * tol, depth + 1, max_depth, out);
  adaptive_recurse(f, mid, b, right, 0.5 * tol, depth + 1, max_depth, out);
}

}  // namespace

const Rule& gauss_legendre(int n) {
  if (n < 1) {
    throw InvalidInput("Gauss-Legendre order must be positive");
  }
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<Rule>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = cache[n];
  if (!slot) {
    slot = std::make_unique<Rule>(compute_gauss_legendre(n));
  }
  return *slot;
}

Rule gauss_legendre(int n, double a, double b) {
  const Rule& ref = gauss_legendre(n);
  Rule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  for (int i = 0; i < n; ++i) {
    rule.nodes[i] = mid + half * ref.nodes[i];
    rule.weights[i] = half * ref.weights[i];
  }
  return rule;
}

AdaptiveResult integrate_adaptive(const std::function<Vec(double)>& f, double a, double b,
                                  double rel_tol, double abs_tol, int max_depth) {
  AdaptiveResult out;
  int evaluations = 0;
  const Panel whole = gk15_panel(f, a, b, evaluations);
  out.value = Vec::Zero(whole.kronrod.size());
  out.evaluations = evaluations;
  const double scale = whole.kronrod.cwiseAbs().maxCoeff();
  const double tol = std::max(abs_tol, rel_tol * scale);
  adaptive_recurse(f, a, b, whole, tol, 0, max_depth, out);
  return out;
}

double integrate_adaptive_scalar(const std::function<double(double)>& f, double a, double b,
                                 double rel_tol, double abs_tol, double* error) {
  const auto result = integrate_adaptive(
      [&](double t) {
        Vec v(1);
        v[0] = f(t);
        return v;
      },
      a, b, rel_tol, abs_tol);
  if (error != nullptr) {
    *error = result.error;
  }
  return result.value[0];
}

const SimplexRule& simplex_rule(int dim, int order) {
  if (dim != 2 && dim != 3) {
    throw InvalidInput("simplex rules exist for dimensions 2 and 3 only");
  }
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::unique_ptr<SimplexRule>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = cache[{dim, order}];
  if (slot) {
    return *slot;
  }
  auto rule = std::make_unique<SimplexRule>();
  const Rule g = gauss_legendre(order, 0.0, 1.0);
  if (dim == 2) {
    // (u, w) -> s = u, t = w (1 - u); reference area 1/2.
    for (int i = 0; i < order; ++i) {
      for (int j = 0; j < order; ++j) {
        const double s = g.nodes[i];
        const double t = g.nodes[j] * (1.0 - s);
        Vec bary(3);
        bary << 1.0 - s - t, s, t;
        rule->barycentric.push_back(bary);
        rule->weights.push_back(2.0 * g.weights[i] * g.weights[j] * (1.0 - s));
      }
    }
  } else {
    // s = u, t = v (1 - u), r = w (1 - u)(1 - v); reference volume 1/6.
    for (int i = 0; i < order; ++i) {
      for (int j = 0; j < order; ++j) {
        for (int k = 0; k < order; ++k) {
          const double u = g.nodes[i];
          const double v = g.nodes[j];
          const double s = u;
          const double t = v * (1.0 - u);
          const double r = g.nodes[k] * (1.0 - u) * (1.0 - v);
          Vec bary(4);
          bary << 1.0 - s - t - r, s, t, r;
          rule->barycentric.push_back(bary);
          rule->weights.push_back(6.0 * g.weights[i] * g.weights[j] * g.weights[k] *
                                  (1.0 - u) * (1.0 - u) * (1.0 - v));
        }
      }
    }
  }
  slot = std::move(rule);
  return *slot;
}

}  // namespace ulamfloat::quad
