#pragma once

// Choi matrices of unital qubit maps and the entanglement-witness checks
// built on them.

#include <cstdint>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "uks/maps.hpp"
#include "uks/numerics.hpp"
#include "uks/pauli.hpp"

namespace uks {

inline constexpr double kWitnessTol = 1e-8;

template <typename Scalar>
using Matrix4 = Eigen::Matrix<Complex<Scalar>, 4, 4>;
using Matrix4cd = Matrix4<double>;

template <typename Scalar>
struct ChoiMatrix {
  Matrix4<Scalar> entries = Matrix4<Scalar>::Zero();
  bool normalized = false;
};

/// sum_ij E_ij (x) Phi(E_ij), i.e. the block matrix [Phi(E_ij)]. The
/// normalized variant is (I (x) Phi)(|psi+><psi+|), half of it.
template <typename Scalar>
ChoiMatrix<Scalar> choi_matrix(const UnitalQubitMap<Scalar>& phi, bool normalized = false) {
  ChoiMatrix<Scalar> out;
  out.normalized = normalized;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      Matrix2<Scalar> e = Matrix2<Scalar>::Zero();
      e(i, j) = Complex<Scalar>(1);
      out.entries.template block<2, 2>(2 * i, 2 * j) = to_matrix(apply(phi, from_matrix(e)));
    }
  }
  if (normalized) out.entries *= Complex<Scalar>(Scalar(0.5));
  return out;
}

template <typename Scalar>
HermitianSpectrum<Matrix4<Scalar>> spectrum(const ChoiMatrix<Scalar>& w) {
  return hermitian_eigen(w.entries);
}

/// Two one-qubit density matrices and their tensor product.
struct ProductState {
  Matrix2cd factor_a;
  Matrix2cd factor_b;
  Matrix4cd rho;
};

Matrix4cd kron(const Matrix2cd& a, const Matrix2cd& b);

/// Re Tr(W rho). Throws NotAState unless rho is Hermitian, PSD and of unit
/// trace to 1e-9.
double witness_value(const ChoiMatrix<double>& w, const Matrix4cd& rho);

/// n pure product states |u><u| (x) |v><v| with u, v drawn isotropically
/// (normalized complex Gaussians).
std::vector<ProductState> sample_separable(std::size_t n, std::uint64_t seed);

/// |eta><eta| for the eigenvector of the most negative eigenvalue. Throws
/// NoNegativeEigenvalue when min eig >= -tol.
Matrix4cd entangled_witness_state(const ChoiMatrix<double>& w, double tol = kWitnessTol);

struct WitnessReport {
  bool positive = false;                 // hypothesis: Phi is positive
  bool not_completely_positive = false;  // min eig(W) < -tol
  bool separable_nonnegative = false;    // Tr(W rho) >= -tol on every sample
  double min_eigenvalue = 0;
  double min_separable_value = 0;
  std::optional<double> detected_value;  // Tr(W rho_ent) when check 2 passes
  std::size_t samples = 0;
  std::uint64_t seed = 0;

  bool is_witness() const { return positive && not_completely_positive && separable_nonnegative; }
};

WitnessReport is_entanglement_witness(const ChoiMatrix<double>& w, const UnitalQubitMapd& phi, std::size_t samples,
                                      std::uint64_t seed, double tol = kWitnessTol);

}  // namespace uks
