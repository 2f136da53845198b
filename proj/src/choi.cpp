#include "uks/choi.hpp"

#include <cmath>
#include <limits>
#include <random>

namespace uks {

namespace {

constexpr double kStateTol = 1e-9;

Eigen::Vector2cd random_unit_vector(std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::Vector2cd v;
  for (int j = 0; j < 2; ++j) v(j) = {gauss(rng), gauss(rng)};
  return v.normalized();
}

}  // namespace

Matrix4cd kron(const Matrix2cd& a, const Matrix2cd& b) {
  Matrix4cd out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
  return out;
}

double witness_value(const ChoiMatrix<double>& w, const Matrix4cd& rho) {
  if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > kStateTol)
    throw Error(ErrorKind::NotAState, "rho is not Hermitian");
  if (std::abs(rho.trace() - std::complex<double>(1.0)) > kStateTol)
    throw Error(ErrorKind::NotAState, "rho must have unit trace");
  if (min_eigenvalue(rho) < -kStateTol) throw Error(ErrorKind::NotAState, "rho is not positive semidefinite");
  return (w.entries * rho).trace().real();
}

std::vector<ProductState> sample_separable(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<ProductState> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Eigen::Vector2cd u = random_unit_vector(rng);
    const Eigen::Vector2cd v = random_unit_vector(rng);
    ProductState s;
    s.factor_a = u * u.adjoint();
    s.factor_b = v * v.adjoint();
    s.rho = kron(s.factor_a, s.factor_b);
    out.push_back(std::move(s));
  }
  return out;
}

Matrix4cd entangled_witness_state(const ChoiMatrix<double>& w, double tol) {
  const auto spec = spectrum(w);
  const double lowest = spec.eigenvalues(3);
  if (!(lowest < -tol)) throw Error(ErrorKind::NoNegativeEigenvalue, "Choi matrix is positive semidefinite");
  const Eigen::Vector4cd eta = spec.eigenvectors.col(3).normalized();
  return eta * eta.adjoint();
}

WitnessReport is_entanglement_witness(const ChoiMatrix<double>& w, const UnitalQubitMapd& phi, std::size_t samples,
                                      std::uint64_t seed, double tol) {
  WitnessReport r;
  r.samples = samples;
  r.seed = seed;

  OptimizerConfig cfg;
  cfg.seed = seed;
  r.positive = is_positive(phi, cfg).positive;

  r.min_eigenvalue = spectrum(w).eigenvalues(3);
  r.not_completely_positive = r.min_eigenvalue < -tol;
  if (r.not_completely_positive) r.detected_value = witness_value(w, entangled_witness_state(w, tol));

  r.min_separable_value = std::numeric_limits<double>::infinity();
  for (const auto& s : sample_separable(samples, seed))
    r.min_separable_value = std::min(r.min_separable_value, witness_value(w, s.rho));
  r.separable_nonnegative = r.min_separable_value >= -tol;
  return r;
}

}  // namespace uks
