#pragma once

// Unital qubit maps in the Pauli basis.
//
//   Phi(w0 I + w.s) = (w0 + lambda.w) I + (T w).s
//
// lambda and T are real, which is exactly the adjoint-preserving case.

#include <optional>

#include <Eigen/Dense>

#include "uks/error.hpp"
#include "uks/numerics.hpp"
#include "uks/pauli.hpp"

namespace uks {

template <typename Scalar>
struct UnitalQubitMap {
  Eigen::Matrix<Scalar, 3, 1> lambda = Eigen::Matrix<Scalar, 3, 1>::Zero();
  Eigen::Matrix<Scalar, 3, 3> T = Eigen::Matrix<Scalar, 3, 3>::Identity();

  static UnitalQubitMap identity() { return {}; }

  /// Matrix transposition: s2 -> -s2.
  static UnitalQubitMap transposition() {
    UnitalQubitMap m;
    m.T.diagonal() << Scalar(1), Scalar(-1), Scalar(1);
    return m;
  }

  /// The 4x4 representation with first row (1, lambda) and first column e1.
  Eigen::Matrix<Scalar, 4, 4> representation() const {
    Eigen::Matrix<Scalar, 4, 4> f = Eigen::Matrix<Scalar, 4, 4>::Zero();
    f(0, 0) = Scalar(1);
    f.template block<1, 3>(0, 1) = lambda.transpose();
    f.template block<3, 3>(1, 1) = T;
    return f;
  }
};

using UnitalQubitMapd = UnitalQubitMap<double>;

template <typename Scalar>
PauliForm<Scalar> apply(const UnitalQubitMap<Scalar>& phi, const PauliForm<Scalar>& p) {
  const CVector3<Scalar> lam = phi.lambda.template cast<Complex<Scalar>>();
  return {p.w0 + dot_u(lam, p.w), phi.T.template cast<Complex<Scalar>>() * p.w};
}

template <typename Scalar>
bool is_trace_preserving(const UnitalQubitMap<Scalar>& phi, Scalar tol = Scalar(kDefaultTol)) {
  return phi.lambda.norm() <= tol;
}

/// t * phi1 + (1 - t) * phi2. Throws OutOfRange unless 0 <= t <= 1.
template <typename Scalar>
UnitalQubitMap<Scalar> convex_combine(const UnitalQubitMap<Scalar>& phi1, const UnitalQubitMap<Scalar>& phi2,
                                      Scalar t) {
  if (!(t >= Scalar(0) && t <= Scalar(1))) throw Error(ErrorKind::OutOfRange, "t must lie in [0, 1]");
  return {t * phi1.lambda + (Scalar(1) - t) * phi2.lambda, t * phi1.T + (Scalar(1) - t) * phi2.T};
}

template <typename Derived>
bool is_rotation(const Eigen::MatrixBase<Derived>& r, typename Derived::Scalar tol = typename Derived::Scalar(kDefaultTol)) {
  using Scalar = typename Derived::Scalar;
  if (r.rows() != 3 || r.cols() != 3) return false;
  const Eigen::Matrix<Scalar, 3, 3> m = r;
  if (!m.allFinite()) return false;
  const Scalar orth = (m.transpose() * m - Eigen::Matrix<Scalar, 3, 3>::Identity()).cwiseAbs().maxCoeff();
  return orth <= tol && std::abs(m.determinant() - Scalar(1)) <= tol;
}

/// x -> U Phi(V x V*) U*, with U, V given by their Bloch rotations:
/// lambda' = RV^T lambda, T' = RU T RV.
template <typename Scalar, typename DerivedU, typename DerivedV>
UnitalQubitMap<Scalar> conjugate(const UnitalQubitMap<Scalar>& phi, const Eigen::MatrixBase<DerivedU>& ru,
                                 const Eigen::MatrixBase<DerivedV>& rv) {
  if (!is_rotation(ru) || !is_rotation(rv)) throw Error(ErrorKind::NotARotation, "expected SO(3) matrices");
  return {rv.transpose() * phi.lambda, ru * phi.T * rv};
}

struct PositivityVerdict {
  bool positive = false;
  /// Bloch vector maximizing |T w| - lambda.w; set when not positive.
  std::optional<Eigen::Vector3d> witness;
  /// (1 + tol) - max_w (|T w| - lambda.w). Negative when not positive.
  double margin = 0;
  double max_g = 0;
};

/// Phi is positive iff |T w| <= 1 + lambda.w on the unit ball. The objective
/// is convex, so the search runs over the unit sphere (the six axis points
/// are always starts) with a few interior spot checks.
PositivityVerdict is_positive(const UnitalQubitMapd& phi, const OptimizerConfig& cfg = {}, double tol = kDefaultTol);

/// Operator norm of T via the sphere maximizer.
double operator_norm(const Eigen::Matrix3d& t, const OptimizerConfig& cfg = {});

/// |T| <= 1 + |lambda| and |lambda| <= 1. Necessary, not sufficient.
bool necessary_bounds(const UnitalQubitMapd& phi, const OptimizerConfig& cfg = {});

}  // namespace uks
