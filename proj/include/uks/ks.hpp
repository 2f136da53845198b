#pragma once

// Kadison-Schwarz checks for unital qubit maps: Phi(x* x) >= Phi(x)* Phi(x).

#include <cstdint>
#include <optional>
#include <string_view>

#include "uks/maps.hpp"
#include "uks/numerics.hpp"
#include "uks/pauli.hpp"

namespace uks {

inline constexpr double kKsTol = 1e-8;

/// Applies phi to a dense 2x2 matrix.
template <typename Scalar>
Matrix2<Scalar> apply_dense(const UnitalQubitMap<Scalar>& phi, const Matrix2<Scalar>& m) {
  return to_matrix(apply(phi, from_matrix(m)));
}

/// Defect Phi(x* x) - Phi(x)* Phi(x), evaluated with dense 2x2 products.
template <typename Scalar>
Matrix2<Scalar> ks_defect(const UnitalQubitMap<Scalar>& phi, const PauliForm<Scalar>& x) {
  const Matrix2<Scalar> xm = to_matrix(x);
  const Matrix2<Scalar> image = apply_dense(phi, xm);
  return apply_dense(phi, Matrix2<Scalar>(xm.adjoint() * xm)) - image.adjoint() * image;
}

template <typename Scalar>
Scalar min_defect_eigenvalue(const UnitalQubitMap<Scalar>& phi, const PauliForm<Scalar>& x) {
  return min_eigenvalue(ks_defect(phi, x));
}

template <typename Scalar>
bool check_ks_at(const UnitalQubitMap<Scalar>& phi, const PauliForm<Scalar>& x, Scalar tol = Scalar(kKsTol)) {
  return min_defect_eigenvalue(phi, x) >= -tol;
}

/// Both sides of the scalar KS conditions:
///   (1)  |Tw|^2 + |w0 + lambda.w|^2
///          <= |w0|^2 + |w|^2 + lambda.(conj(w0) w + w0 conj(w) - i[w, conj(w)])
///   (2)  | i([Tw, T conj(w)] - T[w, conj(w)]) - (lambda.conj(w)) Tw - (lambda.w) T conj(w) |
///          <= rhs1 - lhs1
/// Brackets are unconjugated cross products; dots are bilinear.
template <typename Scalar>
struct ScalarConditions {
  Scalar lhs1 = 0, rhs1 = 0;
  Scalar lhs2 = 0, rhs2 = 0;

  bool holds(Scalar tol = Scalar(kKsTol)) const { return lhs1 <= rhs1 + tol && lhs2 <= rhs2 + tol; }
};

template <typename Scalar>
ScalarConditions<Scalar> scalar_conditions(const UnitalQubitMap<Scalar>& phi, const PauliForm<Scalar>& x) {
  using C = Complex<Scalar>;
  const C i(0, 1);
  const CVector3<Scalar> lam = phi.lambda.template cast<C>();
  const Eigen::Matrix<C, 3, 3> t = phi.T.template cast<C>();
  const CVector3<Scalar>& w = x.w;
  const CVector3<Scalar> wbar = w.conjugate();
  const C w0 = x.w0;

  const CVector3<Scalar> tw = t * w;
  const CVector3<Scalar> twbar = t * wbar;
  const CVector3<Scalar> star_vec = std::conj(w0) * w + w0 * wbar - i * cross(w, wbar);
  const Scalar lambda_term = std::real(dot_u(lam, star_vec));
  const Scalar base = std::norm(w0) + w.squaredNorm();

  ScalarConditions<Scalar> out;
  out.lhs1 = tw.squaredNorm() + std::norm(w0 + dot_u(lam, w));
  out.rhs1 = base + lambda_term;

  const CVector3<Scalar> vec =
      i * (cross(tw, twbar) - t * cross(w, wbar)) - dot_u(lam, wbar) * tw - dot_u(lam, w) * twbar;
  out.lhs2 = vec.norm();
  out.rhs2 = base - std::norm(w0 + dot_u(lam, w)) - tw.squaredNorm() + lambda_term;
  return out;
}

enum class KsVerdict { ViolationFound, NoViolationFound };

constexpr std::string_view to_string(KsVerdict v) {
  return v == KsVerdict::ViolationFound ? "ViolationFound" : "NoViolationFound";
}

/// Outcome of the numeric search. NoViolationFound certifies the search, not
/// membership in the KS set.
struct KSReport {
  KsVerdict verdict = KsVerdict::NoViolationFound;
  std::optional<PauliFormd> witness;
  /// Smallest defect eigenvalue seen (the search floor).
  double min_defect_eigenvalue = 0;
  std::size_t samples_evaluated = 0;
  std::uint64_t seed = 0;
  /// Point where the floor was attained, normalized |w0|^2 + |w|^2 = 1.
  PauliFormd argmin;
};

/// Structured starts: the four matrix units, I and the Paulis, and
/// (s_i +/- i s_j)/sqrt(2) for i < j. All normalized.
std::vector<PauliFormd> structured_ks_starts();

/// (w0, w) packed as 8 reals (re, im interleaved) and back.
PauliFormd unpack_pauli(const Eigen::VectorXd& z);
Eigen::VectorXd pack_pauli(const PauliFormd& p);

/// Minimizes the smallest defect eigenvalue over |w0|^2 + |w|^2 = 1 with
/// `cfg.starts` multistart samples plus the structured starts.
KSReport verify_ks(const UnitalQubitMapd& phi, const OptimizerConfig& cfg = {}, double tol = kKsTol);

}  // namespace uks
