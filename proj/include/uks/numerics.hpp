#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <numeric>
#include <span>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "uks/error.hpp"

namespace uks {

// ---------------------------------------------------------------------------
// Hermitian eigensolver (cyclic complex Jacobi)

template <typename MatrixType>
struct HermitianSpectrum {
  using RealScalar = typename MatrixType::RealScalar;
  static constexpr int Size = MatrixType::RowsAtCompileTime;

  /// Sorted descending.
  Eigen::Matrix<RealScalar, Size, 1> eigenvalues;
  /// Column j belongs to eigenvalues(j).
  Eigen::Matrix<typename MatrixType::Scalar, Size, Size> eigenvectors;
};

inline constexpr int kJacobiMaxSweeps = 100;
inline constexpr double kJacobiOffDiagonalTol = 1e-14;

template <typename Derived>
auto hermitian_eigen(const Eigen::MatrixBase<Derived>& input, double tol = 1e-9)
    -> HermitianSpectrum<typename Derived::PlainObject> {
  using Plain = typename Derived::PlainObject;
  using Scalar = typename Plain::Scalar;
  using Real = typename Plain::RealScalar;

  const Eigen::Index n = input.rows();
  if (n != input.cols() || n > 8)
    throw Error(ErrorKind::NotHermitian, "expected a square matrix of dimension <= 8");
  if (n > 0 && (input - input.adjoint()).cwiseAbs().maxCoeff() > tol)
    throw Error(ErrorKind::NotHermitian, "matrix differs from its adjoint beyond tolerance");

  Plain a = input;
  Plain v = Plain::Identity(n, n);
  // Hermitian part only; the anti-Hermitian residual is below tol.
  a = (a + a.adjoint().eval()) * Real(0.5);
  for (Eigen::Index i = 0; i < n; ++i) a(i, i) = Scalar(std::real(a(i, i)));

  const Real scale = std::max<Real>(Real(1), a.norm());
  auto off_diagonal = [&] {
    Real s = 0;
    for (Eigen::Index p = 0; p < n; ++p)
      for (Eigen::Index q = 0; q < n; ++q)
        if (p != q) s += std::norm(a(p, q));
    return std::sqrt(s);
  };

  int sweep = 0;
  while (off_diagonal() >= Real(kJacobiOffDiagonalTol) * scale) {
    if (sweep++ == kJacobiMaxSweeps)
      throw Error(ErrorKind::NoConvergence, "Jacobi sweep cap reached");
    for (Eigen::Index p = 0; p + 1 < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const Scalar h = a(p, q);
        const Real mag = std::abs(h);
        if (mag == Real(0)) continue;
        // Phase e = h/|h| makes the (p,q) block real symmetric; then a real
        // rotation with the smaller angle annihilates it.
        const Scalar e = h / mag;
        const Real app = std::real(a(p, p));
        const Real aqq = std::real(a(q, q));
        const Real tau = (aqq - app) / (Real(2) * mag);
        const Real t = (tau >= 0 ? Real(1) : Real(-1)) / (std::abs(tau) + std::sqrt(Real(1) + tau * tau));
        const Real c = Real(1) / std::sqrt(Real(1) + t * t);
        const Real s = t * c;
        const Scalar ebar = std::conj(e);

        // Columns: J = [[c, s], [-s conj(e), c conj(e)]] in the (p,q) plane.
        for (Eigen::Index r = 0; r < n; ++r) {
          const Scalar xp = a(r, p), xq = a(r, q);
          a(r, p) = c * xp - s * ebar * xq;
          a(r, q) = s * xp + c * ebar * xq;
          const Scalar vp = v(r, p), vq = v(r, q);
          v(r, p) = c * vp - s * ebar * vq;
          v(r, q) = s * vp + c * ebar * vq;
        }
        // Rows: J^H from the left.
        for (Eigen::Index col = 0; col < n; ++col) {
          const Scalar xp = a(p, col), xq = a(q, col);
          a(p, col) = c * xp - s * e * xq;
          a(q, col) = s * xp + c * e * xq;
        }
        a(p, q) = Scalar(0);
        a(q, p) = Scalar(0);
        a(p, p) = Scalar(std::real(a(p, p)));
        a(q, q) = Scalar(std::real(a(q, q)));
      }
    }
  }

  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index(0));
  std::stable_sort(order.begin(), order.end(), [&](Eigen::Index x, Eigen::Index y) {
    return std::real(a(x, x)) > std::real(a(y, y));
  });

  HermitianSpectrum<Plain> out;
  out.eigenvalues.resize(n);
  out.eigenvectors.resize(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    const auto src = order[static_cast<std::size_t>(j)];
    out.eigenvalues(j) = std::real(a(src, src));
    out.eigenvectors.col(j) = v.col(src);
  }
  return out;
}

/// Smallest eigenvalue of a Hermitian matrix.
template <typename Derived>
typename Derived::RealScalar min_eigenvalue(const Eigen::MatrixBase<Derived>& h, double tol = 1e-9) {
  const auto spec = hermitian_eigen(h, tol);
  return spec.eigenvalues(spec.eigenvalues.size() - 1);
}

// ---------------------------------------------------------------------------
// Deterministic multistart maximizer

struct OptimizerConfig {
  int starts = 256;
  int max_iterations = 200;
  double step_tolerance = 1e-10;
  std::uint64_t seed = 42;
  /// How many of the best seed points get the local coordinate search.
  int polish = 32;
};

namespace domain {

struct Ball {
  int dimension = 3;
  double radius = 1.0;
};
struct Sphere {
  int dimension = 3;
};
/// {x, y >= 0, x + y <= 1}
struct Triangle {};
struct Box {
  Eigen::VectorXd lower;
  Eigen::VectorXd upper;
};

}  // namespace domain

using Domain = std::variant<domain::Ball, domain::Sphere, domain::Triangle, domain::Box>;

int domain_dimension(const Domain& d);
/// Nearest feasible point (Euclidean projection; sphere uses normalization).
Eigen::VectorXd project(const Domain& d, const Eigen::VectorXd& x);
bool is_feasible(const Domain& d, const Eigen::VectorXd& x, double tol = 1e-12);

struct MaximizeResult {
  Eigen::VectorXd argmax;
  double value = 0;
  std::size_t evaluations = 0;
};

using Objective = std::function<double(const Eigen::VectorXd&)>;

/// Maximizes `f` over `d`. Seeds are a Halton lattice (ceil(starts/2)
/// points), seeded uniform points (floor(starts/2)) and any `extra_starts`;
/// the best `cfg.polish` seeds are refined by projected coordinate search with
/// step halving. Ties resolve to the first point in scan order.
MaximizeResult maximize(const Objective& f, const Domain& d, const OptimizerConfig& cfg,
                        std::span<const Eigen::VectorXd> extra_starts = {});

/// Mixes a seed with an index; used for per-cell / per-sample streams.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace uks
