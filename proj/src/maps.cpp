#include "uks/maps.hpp"

#include <array>

namespace uks {

namespace {

double positivity_objective(const UnitalQubitMapd& phi, const Eigen::Vector3d& w) {
  return (phi.T * w).norm() - phi.lambda.dot(w);
}

std::array<Eigen::VectorXd, 6> axis_points() {
  std::array<Eigen::VectorXd, 6> pts;
  for (int j = 0; j < 3; ++j) {
    pts[static_cast<std::size_t>(2 * j)] = Eigen::VectorXd::Unit(3, j);
    pts[static_cast<std::size_t>(2 * j + 1)] = -Eigen::VectorXd::Unit(3, j);
  }
  return pts;
}

}  // namespace

PositivityVerdict is_positive(const UnitalQubitMapd& phi, const OptimizerConfig& cfg, double tol) {
  const auto axes = axis_points();
  auto g = [&](const Eigen::VectorXd& w) { return positivity_objective(phi, w); };
  const auto res = maximize(g, domain::Sphere{3}, cfg, axes);

  double max_g = res.value;
  Eigen::Vector3d arg = res.argmax;
  // Interior spot checks along the argmax ray.
  for (const double r : {0.0, 0.5}) {
    const Eigen::Vector3d w = r * arg;
    const double v = positivity_objective(phi, w);
    if (v > max_g) {
      max_g = v;
      arg = w;
    }
  }

  PositivityVerdict out;
  out.max_g = max_g;
  out.margin = (1.0 + tol) - max_g;
  out.positive = out.margin >= 0.0;
  if (!out.positive) out.witness = arg;
  return out;
}

double operator_norm(const Eigen::Matrix3d& t, const OptimizerConfig& cfg) {
  const auto axes = axis_points();
  auto f = [&](const Eigen::VectorXd& w) { return (t * w).norm(); };
  return maximize(f, domain::Sphere{3}, cfg, axes).value;
}

bool necessary_bounds(const UnitalQubitMapd& phi, const OptimizerConfig& cfg) {
  const double lam = phi.lambda.norm();
  if (lam > 1.0 + 1e-12) return false;
  return operator_norm(phi.T, cfg) <= 1.0 + lam + 1e-9;
}

}  // namespace uks
