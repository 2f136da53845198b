#pragma once

// Random generators and independent dense oracles shared by the test suites.

#include <cmath>
#include <complex>
#include <random>

#include <Eigen/Dense>

#include "uks/maps.hpp"
#include "uks/pauli.hpp"

namespace uks::test {

using cd = std::complex<double>;
inline const cd I1{0.0, 1.0};

// Literal Pauli matrices, kept separate from the library's conversions.
inline Matrix2cd sigma(int j) {
  Matrix2cd m;
  if (j == 0) m << 0, 1, 1, 0;
  if (j == 1) m << 0, -I1, I1, 0;
  if (j == 2) m << 1, 0, 0, -1;
  return m;
}

inline Matrix2cd dense(const PauliFormd& p) {
  Matrix2cd m = p.w0 * Matrix2cd::Identity();
  for (int j = 0; j < 3; ++j) m += p.w(j) * sigma(j);
  return m;
}

inline Matrix2cd unit(int r, int c) {
  Matrix2cd m = Matrix2cd::Zero();
  m(r, c) = 1.0;
  return m;
}

inline cd random_disk(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (;;) {
    const cd z(u(rng), u(rng));
    if (std::abs(z) <= 1.0) return z;
  }
}

inline PauliFormd random_pauli(std::mt19937_64& rng) {
  PauliFormd p;
  p.w0 = random_disk(rng);
  for (int j = 0; j < 3; ++j) p.w(j) = random_disk(rng);
  return p;
}

inline PauliFormd random_hermitian_pauli(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  PauliFormd p;
  p.w0 = u(rng);
  for (int j = 0; j < 3; ++j) p.w(j) = u(rng);
  return p;
}

/// |w0|^2 + |w|^2 = 1.
inline PauliFormd random_normalized_pauli(std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  PauliFormd p;
  p.w0 = {g(rng), g(rng)};
  for (int j = 0; j < 3; ++j) p.w(j) = {g(rng), g(rng)};
  const double n = std::sqrt(std::norm(p.w0) + p.w.squaredNorm());
  return p * cd(1.0 / n);
}

inline UnitalQubitMapd random_map(std::mt19937_64& rng, double scale = 1.0) {
  std::uniform_real_distribution<double> u(-scale, scale);
  UnitalQubitMapd m;
  for (int i = 0; i < 3; ++i) {
    m.lambda(i) = u(rng);
    for (int j = 0; j < 3; ++j) m.T(i, j) = u(rng);
  }
  return m;
}

inline Eigen::Matrix3d random_rotation(std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  Eigen::Quaterniond q(g(rng), g(rng), g(rng), g(rng));
  q.normalize();
  return q.toRotationMatrix();
}

/// Fibonacci lattice on the unit sphere.
inline Eigen::Vector3d fibonacci_point(int i, int n) {
  const double golden = M_PI * (3.0 - std::sqrt(5.0));
  const double z = 1.0 - 2.0 * (i + 0.5) / n;
  const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
  return {r * std::cos(golden * i), r * std::sin(golden * i), z};
}

/// Brute-force positivity: smallest eigenvalue of Phi(I + w.s) over a Bloch
/// sphere grid, computed with Eigen's own solver on dense matrices.
inline double bloch_grid_min_eigenvalue(const UnitalQubitMapd& phi, int n = 10000) {
  double worst = 1e300;
  for (int i = 0; i < n; ++i) {
    const Eigen::Vector3d w = fibonacci_point(i, n);
    const Eigen::Vector3d tw = phi.T * w;
    Matrix2cd img = (1.0 + phi.lambda.dot(w)) * Matrix2cd::Identity();
    for (int j = 0; j < 3; ++j) img += tw(j) * sigma(j);
    Eigen::SelfAdjointEigenSolver<Matrix2cd> es(img, Eigen::EigenvaluesOnly);
    worst = std::min(worst, es.eigenvalues()(0));
  }
  return worst;
}

}  // namespace uks::test
