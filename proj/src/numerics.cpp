#include "uks/numerics.hpp"

#include <array>
#include <limits>
#include <random>

namespace uks {

namespace {

constexpr std::array<int, 16> kPrimes = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53};

double radical_inverse(std::uint64_t index, int base) {
  double result = 0;
  double f = 1.0 / base;
  while (index > 0) {
    result += f * static_cast<double>(index % static_cast<std::uint64_t>(base));
    index /= static_cast<std::uint64_t>(base);
    f /= base;
  }
  return result;
}

void validate(const Domain& d) {
  std::visit(
      [](const auto& dom) {
        using T = std::decay_t<decltype(dom)>;
        if constexpr (std::is_same_v<T, domain::Ball>) {
          if (dom.dimension < 1 || dom.dimension > static_cast<int>(kPrimes.size()) || !(dom.radius > 0))
            throw Error(ErrorKind::InvalidDomain, "ball needs 1 <= dimension <= 16 and radius > 0");
        } else if constexpr (std::is_same_v<T, domain::Sphere>) {
          if (dom.dimension < 2 || dom.dimension > static_cast<int>(kPrimes.size()))
            throw Error(ErrorKind::InvalidDomain, "sphere needs 2 <= dimension <= 16");
        } else if constexpr (std::is_same_v<T, domain::Box>) {
          if (dom.lower.size() == 0 || dom.lower.size() != dom.upper.size() ||
              dom.lower.size() > static_cast<Eigen::Index>(kPrimes.size()))
            throw Error(ErrorKind::InvalidDomain, "box bounds must have equal, nonzero size <= 16");
          if (((dom.upper - dom.lower).array() < 0).any() || !dom.lower.allFinite() || !dom.upper.allFinite())
            throw Error(ErrorKind::InvalidDomain, "box bounds must be finite with lower <= upper");
        }
      },
      d);
}

Eigen::VectorXd project_to_segment(const Eigen::Vector2d& p, const Eigen::Vector2d& a, const Eigen::Vector2d& b) {
  const Eigen::Vector2d ab = b - a;
  const double t = std::clamp((p - a).dot(ab) / ab.squaredNorm(), 0.0, 1.0);
  return a + t * ab;
}

// Maps a point of the unit cube to the domain.
Eigen::VectorXd from_unit_cube(const Domain& d, const Eigen::VectorXd& u) {
  return std::visit(
      [&](const auto& dom) -> Eigen::VectorXd {
        using T = std::decay_t<decltype(dom)>;
        if constexpr (std::is_same_v<T, domain::Ball>) {
          return project(d, (2.0 * u.array() - 1.0).matrix() * dom.radius);
        } else if constexpr (std::is_same_v<T, domain::Sphere>) {
          return project(d, (2.0 * u.array() - 1.0).matrix());
        } else if constexpr (std::is_same_v<T, domain::Triangle>) {
          Eigen::VectorXd p = u;
          if (p(0) + p(1) > 1.0) {
            p(0) = 1.0 - p(0);
            p(1) = 1.0 - p(1);
          }
          return p;
        } else {
          return (dom.lower.array() + u.array() * (dom.upper - dom.lower).array()).matrix();
        }
      },
      d);
}

double initial_step(const Domain& d) {
  return std::visit(
      [](const auto& dom) -> double {
        using T = std::decay_t<decltype(dom)>;
        if constexpr (std::is_same_v<T, domain::Ball>) {
          return 0.25 * dom.radius;
        } else if constexpr (std::is_same_v<T, domain::Box>) {
          const double w = (dom.upper - dom.lower).maxCoeff();
          return w > 0 ? 0.25 * w : 0.0;
        } else {
          return 0.25;
        }
      },
      d);
}

}  // namespace

int domain_dimension(const Domain& d) {
  return std::visit(
      [](const auto& dom) -> int {
        using T = std::decay_t<decltype(dom)>;
        if constexpr (std::is_same_v<T, domain::Triangle>) {
          return 2;
        } else if constexpr (std::is_same_v<T, domain::Box>) {
          return static_cast<int>(dom.lower.size());
        } else {
          return dom.dimension;
        }
      },
      d);
}

Eigen::VectorXd project(const Domain& d, const Eigen::VectorXd& x) {
  return std::visit(
      [&](const auto& dom) -> Eigen::VectorXd {
        using T = std::decay_t<decltype(dom)>;
        if constexpr (std::is_same_v<T, domain::Ball>) {
          const double n = x.norm();
          return n > dom.radius ? Eigen::VectorXd(x * (dom.radius / n)) : x;
        } else if constexpr (std::is_same_v<T, domain::Sphere>) {
          const double n = x.norm();
          if (n == 0.0) return Eigen::VectorXd::Unit(x.size(), 0);
          return x / n;
        } else if constexpr (std::is_same_v<T, domain::Triangle>) {
          if (x(0) >= 0 && x(1) >= 0 && x(0) + x(1) <= 1.0) return x;
          const Eigen::Vector2d p(x(0), x(1));
          const Eigen::Vector2d o(0, 0), ex(1, 0), ey(0, 1);
          Eigen::VectorXd best = project_to_segment(p, o, ex);
          for (const auto& cand : {project_to_segment(p, o, ey), project_to_segment(p, ex, ey)}) {
            if ((cand - p).squaredNorm() < (best - p).squaredNorm()) best = cand;
          }
          // The hypotenuse projection can leave x + y = 1 + O(eps).
          best = best.cwiseMax(0.0);
          if (best(0) + best(1) > 1.0) best(1) = 1.0 - best(0);
          return best;
        } else {
          return x.cwiseMax(dom.lower).cwiseMin(dom.upper);
        }
      },
      d);
}

bool is_feasible(const Domain& d, const Eigen::VectorXd& x, double tol) {
  if (x.size() != domain_dimension(d)) return false;
  return std::visit(
      [&](const auto& dom) -> bool {
        using T = std::decay_t<decltype(dom)>;
        if constexpr (std::is_same_v<T, domain::Ball>) {
          return x.norm() <= dom.radius + tol;
        } else if constexpr (std::is_same_v<T, domain::Sphere>) {
          return std::abs(x.norm() - 1.0) <= tol;
        } else if constexpr (std::is_same_v<T, domain::Triangle>) {
          return x(0) >= -tol && x(1) >= -tol && x(0) + x(1) <= 1.0 + tol;
        } else {
          return ((x - dom.lower).array() >= -tol).all() && ((dom.upper - x).array() >= -tol).all();
        }
      },
      d);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  // splitmix64 finalizer over a golden-ratio stride
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

MaximizeResult maximize(const Objective& f, const Domain& d, const OptimizerConfig& cfg,
                        std::span<const Eigen::VectorXd> extra_starts) {
  validate(d);
  if (cfg.starts < 1 || cfg.max_iterations < 0 || cfg.polish < 0)
    throw Error(ErrorKind::InvalidDomain, "optimizer config needs starts >= 1");
  const int dim = domain_dimension(d);

  struct Seed {
    Eigen::VectorXd x;
    double value;
  };
  std::vector<Seed> seeds;
  seeds.reserve(extra_starts.size() + static_cast<std::size_t>(cfg.starts));
  std::size_t evaluations = 0;
  auto eval = [&](const Eigen::VectorXd& x) {
    ++evaluations;
    const double v = f(x);
    return std::isfinite(v) ? v : -std::numeric_limits<double>::infinity();
  };

  for (const auto& s : extra_starts) {
    if (s.size() != dim) throw Error(ErrorKind::InvalidDomain, "start point has wrong dimension");
    Eigen::VectorXd x = project(d, s);
    const double v = eval(x);
    seeds.push_back({std::move(x), v});
  }

  const int lattice = (cfg.starts + 1) / 2;
  const int random = cfg.starts / 2;
  Eigen::VectorXd u(dim);
  for (int i = 0; i < lattice; ++i) {
    for (int j = 0; j < dim; ++j) u(j) = radical_inverse(static_cast<std::uint64_t>(i) + 1, kPrimes[static_cast<std::size_t>(j)]);
    Eigen::VectorXd x = from_unit_cube(d, u);
    const double v = eval(x);
    seeds.push_back({std::move(x), v});
  }
  std::mt19937_64 rng(cfg.seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  for (int i = 0; i < random; ++i) {
    for (int j = 0; j < dim; ++j) u(j) = unif(rng);
    Eigen::VectorXd x = from_unit_cube(d, u);
    const double v = eval(x);
    seeds.push_back({std::move(x), v});
  }

  std::vector<std::size_t> order(seeds.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return seeds[a].value > seeds[b].value; });

  MaximizeResult best{seeds[order.front()].x, seeds[order.front()].value, 0};
  const std::size_t polish = std::min(order.size(), static_cast<std::size_t>(cfg.polish));
  const double step0 = initial_step(d);
  const double ball_radius = std::holds_alternative<domain::Ball>(d) ? std::get<domain::Ball>(d).radius : 0.0;

  for (std::size_t r = 0; r < polish; ++r) {
    Eigen::VectorXd x = seeds[order[r]].x;
    double fx = seeds[order[r]].value;
    double step = step0;
    for (int it = 0; it < cfg.max_iterations && step >= cfg.step_tolerance; ++it) {
      const Eigen::VectorXd base = x;
      bool improved = false;
      for (int j = 0; j < dim; ++j) {
        for (const double dir : {1.0, -1.0}) {
          Eigen::VectorXd y = x;
          y(j) += dir * step;
          y = project(d, y);
          double fy = eval(y);
          if (!(fy > fx) && ball_radius > 0 && x.norm() >= ball_radius * (1.0 - 1e-12)) {
            // Slide along the bounding sphere instead of stepping inside.
            y = x;
            y(j) += dir * step;
            y *= ball_radius / y.norm();
            fy = eval(y);
          }
          if (fy > fx) {
            x = std::move(y);
            fx = fy;
            improved = true;
            break;
          }
        }
      }
      if (improved) {
        // Pattern move: extrapolate along the sweep's net displacement.
        Eigen::VectorXd delta = x - base;
        for (int m = 0; m < 32; ++m) {
          Eigen::VectorXd y = project(d, x + delta);
          const double fy = eval(y);
          if (!(fy > fx)) break;
          delta = y - x;
          x = std::move(y);
          fx = fy;
          delta *= 2.0;
        }
      } else {
        step *= 0.5;
      }
    }
    if (fx > best.value) {
      best.argmax = std::move(x);
      best.value = fx;
    }
  }
  best.evaluations = evaluations;
  return best;
}

}  // namespace uks
