#include <doctest.h>

#include "test_support.hpp"
#include "uks/ks.hpp"

using namespace uks;
using namespace uks::test;

namespace {

UnitalQubitMapd family_map(double a, double k) {
  UnitalQubitMapd m;
  m.lambda << a, 0, 0;
  m.T = Eigen::Vector3d(0, k, k).asDiagonal();
  return m;
}

// Phi on a dense matrix through the literal Pauli coefficients tr(s_j m)/2.
Matrix2cd dense_apply(const UnitalQubitMapd& phi, const Matrix2cd& m) {
  const cd w0 = m.trace() / 2.0;
  Eigen::Vector3cd w;
  for (int j = 0; j < 3; ++j) w(j) = (sigma(j) * m).trace() / 2.0;
  const cd img0 = w0 + phi.lambda(0) * w(0) + phi.lambda(1) * w(1) + phi.lambda(2) * w(2);
  const Eigen::Vector3cd tw = phi.T.cast<cd>() * w;
  Matrix2cd out = img0 * Matrix2cd::Identity();
  for (int j = 0; j < 3; ++j) out += tw(j) * sigma(j);
  return out;
}

double oracle_min_defect(const UnitalQubitMapd& phi, const PauliFormd& x) {
  const Matrix2cd xm = dense(x);
  const Matrix2cd img = dense_apply(phi, xm);
  const Matrix2cd d = dense_apply(phi, xm.adjoint() * xm) - img.adjoint() * img;
  return Eigen::SelfAdjointEigenSolver<Matrix2cd>(d, Eigen::EigenvaluesOnly).eigenvalues()(0);
}

OptimizerConfig budget(int starts, std::uint64_t seed = 42) {
  OptimizerConfig cfg;
  cfg.starts = starts;
  cfg.seed = seed;
  return cfg;
}

}  // namespace

TEST_CASE("ks_defect: examples") {
  std::mt19937_64 rng(1);
  for (int n = 0; n < 20; ++n) {
    const PauliFormd x = random_pauli(rng);
    CHECK(ks_defect(UnitalQubitMapd::identity(), x).cwiseAbs().maxCoeff() < 1e-14);
  }

  const PauliFormd e12 = from_matrix(unit(0, 1));
  const Matrix2cd d = ks_defect(UnitalQubitMapd::transposition(), e12);
  Matrix2cd expected = Matrix2cd::Zero();
  expected(0, 0) = -1;
  expected(1, 1) = 1;
  CHECK((d - expected).cwiseAbs().maxCoeff() < 1e-15);

  const double k = 0.6, r = 1.0 / std::sqrt(2.0);
  const PauliFormd x{0, CVector3<double>(0, r, r * I1)};
  const Matrix2cd dk = ks_defect(family_map(1.0, k), x);
  CHECK((dk + k * k * (Matrix2cd::Identity() - sigma(0))).cwiseAbs().maxCoeff() < 1e-15);
  CHECK(std::abs(min_defect_eigenvalue(family_map(1.0, k), x) + 0.72) < 1e-14);
}

TEST_CASE("scalar_conditions: examples") {
  std::mt19937_64 rng(2);
  for (int n = 0; n < 20; ++n) {
    const auto sc = scalar_conditions(UnitalQubitMapd::identity(), random_pauli(rng));
    CHECK(std::abs(sc.lhs1 - sc.rhs1) < 1e-12);
    CHECK(std::abs(sc.lhs2 - sc.rhs2) < 1e-12);
    CHECK(sc.holds());
  }

  const double r = 1.0 / std::sqrt(2.0);
  const PauliFormd x{0, CVector3<double>(0, r, r * I1)};
  const auto sc = scalar_conditions(family_map(1.0, 0.6), x);
  CHECK(std::abs(sc.lhs1 - 0.36) < 1e-14);
  CHECK(std::abs(sc.rhs1) < 1e-14);
  CHECK_FALSE(sc.holds());

  // With lambda = 0 the lambda terms vanish: rhs1 = |w0|^2 + |w|^2.
  UnitalQubitMapd bistochastic;
  bistochastic.T = random_map(rng).T;
  const PauliFormd y = random_pauli(rng);
  const auto sb = scalar_conditions(bistochastic, y);
  CHECK(std::abs(sb.rhs1 - (std::norm(y.w0) + y.w.squaredNorm())) < 1e-14);
  CHECK(std::abs(sb.lhs1 - ((bistochastic.T.cast<cd>() * y.w).squaredNorm() + std::norm(y.w0))) < 1e-14);
}

TEST_CASE("check_ks_at") {
  PauliFormd s1;
  s1.w(0) = 1.0;
  CHECK(check_ks_at(UnitalQubitMapd::identity(), s1));
  CHECK(check_ks_at(UnitalQubitMapd::transposition(), s1));
  CHECK(std::abs(min_defect_eigenvalue(UnitalQubitMapd::transposition(), s1)) < 1e-15);
  CHECK_FALSE(check_ks_at(UnitalQubitMapd::transposition(), from_matrix(unit(0, 1))));
}

TEST_CASE("structured starts") {
  const auto starts = structured_ks_starts();
  CHECK(starts.size() == 14);
  for (const auto& p : starts) CHECK(std::abs(std::norm(p.w0) + p.w.squaredNorm() - 1.0) < 1e-15);
  std::mt19937_64 rng(3);
  const PauliFormd p = random_pauli(rng);
  CHECK(approx_equal(unpack_pauli(pack_pauli(p)), p, 0.0));
}

TEST_CASE("verify_ks: examples") {
  const auto id = verify_ks(UnitalQubitMapd::identity(), budget(10000));
  CHECK(id.verdict == KsVerdict::NoViolationFound);
  CHECK(std::abs(id.min_defect_eigenvalue) < 1e-12);
  CHECK_FALSE(id.witness.has_value());
  CHECK(id.seed == 42);
  CHECK(id.samples_evaluated >= 10000);

  const auto tr = verify_ks(UnitalQubitMapd::transposition(), budget(10000));
  REQUIRE(tr.verdict == KsVerdict::ViolationFound);
  CHECK(tr.min_defect_eigenvalue <= -0.99);
  REQUIRE(tr.witness.has_value());
  CHECK(min_defect_eigenvalue(UnitalQubitMapd::transposition(), *tr.witness) <= -kKsTol);
  CHECK(std::abs(oracle_min_defect(UnitalQubitMapd::transposition(), *tr.witness) - tr.min_defect_eigenvalue) < 1e-12);

  const auto fam = verify_ks(family_map(1.0, 0.6), budget(10000));
  REQUIRE(fam.verdict == KsVerdict::ViolationFound);
  CHECK(fam.min_defect_eigenvalue <= -0.7199);
}

TEST_CASE("verify_ks is deterministic for a fixed seed") {
  std::mt19937_64 rng(4);
  const auto phi = random_map(rng, 0.5);
  const auto a = verify_ks(phi, budget(500, 9));
  const auto b = verify_ks(phi, budget(500, 9));
  CHECK(a.min_defect_eigenvalue == b.min_defect_eigenvalue);
  CHECK(pack_pauli(a.argmin) == pack_pauli(b.argmin));
}

TEST_CASE("property: defect agrees with an independent dense oracle") {
  std::mt19937_64 rng(5);
  for (int n = 0; n < 1000; ++n) {
    const auto phi = random_map(rng);
    const PauliFormd x = random_pauli(rng);
    REQUIRE(std::abs(min_defect_eigenvalue(phi, x) - oracle_min_defect(phi, x)) < 1e-10);
    const Matrix2cd d = ks_defect(phi, x);
    REQUIRE((d - d.adjoint()).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("property: scalar conditions are equivalent to a PSD defect") {
  std::mt19937_64 rng(6);
  int violated = 0, satisfied = 0;
  for (int m = 0; m < 1000; ++m) {
    const auto phi = random_map(rng, m % 2 == 0 ? 1.0 : 0.4);
    for (int n = 0; n < 100; ++n) {
      const PauliFormd x = random_pauli(rng);
      const auto sc = scalar_conditions(phi, x);
      const bool psd = min_defect_eigenvalue(phi, x) >= -kKsTol;
      REQUIRE(sc.holds(kKsTol) == psd);
      // min eigenvalue of the defect is exactly rhs2 - lhs2.
      REQUIRE(std::abs((sc.rhs2 - sc.lhs2) - min_defect_eigenvalue(phi, x)) < 1e-10);
      (psd ? satisfied : violated)++;
    }
  }
  CHECK(violated > 1000);
  CHECK(satisfied > 1000);
}

TEST_CASE("property: homogeneity of degree two") {
  std::mt19937_64 rng(7);
  for (int n = 0; n < 1000; ++n) {
    const auto phi = random_map(rng);
    const PauliFormd x = random_pauli(rng);
    const cd c = random_disk(rng) * 3.0;
    const Matrix2cd lhs = ks_defect(phi, x * c);
    const Matrix2cd rhs = std::norm(c) * ks_defect(phi, x);
    REQUIRE((lhs - rhs).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("property: Kadison's inequality for Hermitian x under positive maps") {
  std::mt19937_64 rng(8);
  int tested = 0;
  while (tested < 1000) {
    const auto phi = random_map(rng, 0.45);
    if (!is_positive(phi).positive) continue;
    const PauliFormd x = random_hermitian_pauli(rng);
    REQUIRE(check_ks_at(phi, x));
    ++tested;
  }
}

TEST_CASE("property: convexity and conjugation closure of the numeric verdict") {
  std::mt19937_64 rng(9);
  std::vector<UnitalQubitMapd> clean;
  int attempts = 0;
  while (clean.size() < 100 && attempts < 2000) {
    ++attempts;
    const auto phi = random_map(rng, 0.3);
    if (verify_ks(phi, budget(10000, static_cast<std::uint64_t>(attempts))).verdict == KsVerdict::NoViolationFound)
      clean.push_back(phi);
  }
  REQUIRE(clean.size() == 100);
  MESSAGE("maps sampled to find 100 search-clean ones: " << attempts);

  for (std::size_t i = 0; i < 50; ++i) {
    const auto mid = convex_combine(clean[2 * i], clean[2 * i + 1], 0.5);
    const auto r = verify_ks(mid, budget(1000, i));
    REQUIRE(r.verdict == KsVerdict::NoViolationFound);
  }
  for (std::size_t i = 0; i < 20; ++i) {
    const auto psi = conjugate(clean[i], random_rotation(rng), random_rotation(rng));
    REQUIRE(verify_ks(psi, budget(10000, i)).verdict == KsVerdict::NoViolationFound);
  }
}
