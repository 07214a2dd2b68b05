#include "ulamfloat/sphere.hpp"

#include "ulamfloat/quadrature.hpp"

#include <boost/math/special_functions/erf.hpp>

#include <cmath>
#include <cstdint>
#include <iterator>

namespace ulamfloat {

namespace {

double radical_inverse(int base, std::uint64_t index) {
  double result = 0.0;
  double f = 1.0 / base;
  while (index > 0) {
    result += f * static_cast<double>(index % base);
    index /= base;
    f /= base;
  }
  return result;
}

constexpr int kPrimes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31};

}  // namespace

Mat orthonormal_complement(const Direction& theta) {
  const int n = theta.dim();
  // Householder reflection mapping e_k to theta; its other columns span theta^perp.
  int k = 0;
  theta.vec().cwiseAbs().maxCoeff(&k);
  Vec v = theta.vec();
  v[k] += (v[k] >= 0.0 ? 1.0 : -1.0);
  Mat h = Mat::Identity(n, n) - 2.0 * v * v.transpose() / v.squaredNorm();
  Mat basis(n, n - 1);
  int col = 0;
  for (int j = 0; j < n; ++j) {
    if (j != k) {
      basis.col(col++) = h.col(j);
    }
  }
  return basis;
}

std::vector<Direction> direction_grid(int n, int m) {
  if (n < 2) {
    throw InvalidInput("direction grids need dimension >= 2");
  }
  if (m < 2 || m % 2 != 0) {
    throw InvalidInput("direction grid size must be even and >= 2");
  }
  std::vector<Direction> half;
  const int h = m / 2;
  half.reserve(h);
  if (n == 2) {
    for (int i = 0; i < h; ++i) {
      half.push_back(Direction::planar(2.0 * std::numbers::pi * i / m));
    }
  } else if (n == 3) {
    const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
    for (int i = 0; i < h; ++i) {
      const double z = (i + 0.5) / h;
      const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
      const double phi = golden * i;
      Vec v(3);
      v << r * std::cos(phi), r * std::sin(phi), z;
      half.emplace_back(std::move(v));
    }
  } else {
    if (n > static_cast<int>(std::size(kPrimes))) {
      throw InvalidInput("direction grids support n <= 11");
    }
    for (int i = 0; i < h; ++i) {
      Vec v(n);
      for (int j = 0; j < n; ++j) {
        const double q = radical_inverse(kPrimes[j], static_cast<std::uint64_t>(i) + 1);
        v[j] = std::sqrt(2.0) * boost::math::erf_inv(2.0 * q - 1.0);
      }
      half.emplace_back(std::move(v));
    }
  }
  std::vector<Direction> grid = half;
  grid.reserve(m);
  for (const auto& d : half) {
    grid.push_back(-d);
  }
  return grid;
}

std::vector<SphereNode> sphere_quadrature(int n, int resolution) {
  if (n < 1) {
    throw InvalidInput("sphere quadrature needs n >= 1");
  }
  if (resolution < 1) {
    throw InvalidInput("sphere quadrature resolution must be positive");
  }
  std::vector<SphereNode> nodes;
  if (n == 1) {
    nodes.push_back({Vec::Constant(1, 1.0), 1.0});
    nodes.push_back({Vec::Constant(1, -1.0), 1.0});
    return nodes;
  }
  const int azimuth = n == 2 ? resolution : 2 * resolution;
  const double dphi = 2.0 * std::numbers::pi / azimuth;
  if (n == 2) {
    for (int i = 0; i < azimuth; ++i) {
      Vec u(2);
      u << std::cos(i * dphi), std::sin(i * dphi);
      nodes.push_back({u, dphi});
    }
    return nodes;
  }
  // Hyperspherical coordinates: polar angles a_1..a_{n-2} in [0, pi] with
  // density sin^{n-1-k}(a_k), last angle uniform on [0, 2 pi).
  const quad::Rule polar = quad::gauss_legendre(resolution, 0.0, std::numbers::pi);
  const int polar_count = n - 2;
  std::vector<int> idx(polar_count, 0);
  while (true) {
    double w = 1.0;
    Vec prefix(n);
    double sin_prod = 1.0;
    for (int k = 0; k < polar_count; ++k) {
      const double a = polar.nodes[idx[k]];
      prefix[k] = sin_prod * std::cos(a);
      w *= polar.weights[idx[k]] * std::pow(std::sin(a), n - 2 - k);
      sin_prod *= std::sin(a);
    }
    for (int i = 0; i < azimuth; ++i) {
      Vec u = prefix;
      u[n - 2] = sin_prod * std::cos(i * dphi);
      u[n - 1] = sin_prod * std::sin(i * dphi);
      nodes.push_back({u, w * dphi});
    }
    int k = polar_count - 1;
    while (k >= 0 && ++idx[k] == resolution) {
      idx[k] = 0;
      --k;
    }
    if (k < 0) {
      break;
    }
  }
  return nodes;
}

}  // namespace ulamfloat
