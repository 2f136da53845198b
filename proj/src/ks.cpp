#include "uks/ks.hpp"

#include <cmath>

namespace uks {

PauliFormd unpack_pauli(const Eigen::VectorXd& z) {
  PauliFormd p;
  p.w0 = {z(0), z(1)};
  for (int j = 0; j < 3; ++j) p.w(j) = {z(2 + 2 * j), z(3 + 2 * j)};
  return p;
}

Eigen::VectorXd pack_pauli(const PauliFormd& p) {
  Eigen::VectorXd z(8);
  z(0) = p.w0.real();
  z(1) = p.w0.imag();
  for (int j = 0; j < 3; ++j) {
    z(2 + 2 * j) = p.w(j).real();
    z(3 + 2 * j) = p.w(j).imag();
  }
  return z;
}

std::vector<PauliFormd> structured_ks_starts() {
  std::vector<PauliFormd> out;
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      Matrix2cd e = Matrix2cd::Zero();
      e(r, c) = 1.0;
      out.push_back(from_matrix(e));
    }
  }
  out.push_back(PauliFormd::identity());
  for (int j = 0; j < 3; ++j) {
    PauliFormd s;
    s.w(j) = 1.0;
    out.push_back(s);
  }
  const std::complex<double> i(0, 1);
  for (int a = 0; a < 3; ++a) {
    for (int b = a + 1; b < 3; ++b) {
      for (const double sign : {1.0, -1.0}) {
        PauliFormd s;
        s.w(a) = 1.0;
        s.w(b) = sign * i;
        out.push_back(s);
      }
    }
  }
  for (auto& p : out) {
    const double n = std::sqrt(std::norm(p.w0) + p.w.squaredNorm());
    p = p * std::complex<double>(1.0 / n);
  }
  return out;
}

KSReport verify_ks(const UnitalQubitMapd& phi, const OptimizerConfig& cfg, double tol) {
  std::vector<Eigen::VectorXd> starts;
  for (const auto& p : structured_ks_starts()) starts.push_back(pack_pauli(p));

  auto objective = [&](const Eigen::VectorXd& z) { return -min_defect_eigenvalue(phi, unpack_pauli(z)); };
  const auto res = maximize(objective, domain::Sphere{8}, cfg, starts);

  KSReport report;
  report.min_defect_eigenvalue = -res.value;
  report.samples_evaluated = res.evaluations;
  report.seed = cfg.seed;
  report.argmin = unpack_pauli(res.argmax);
  if (report.min_defect_eigenvalue < -tol) {
    report.verdict = KsVerdict::ViolationFound;
    report.witness = report.argmin;
  }
  return report;
}

}  // namespace uks
