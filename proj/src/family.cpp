#include "uks/family.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <thread>

namespace uks::family {

namespace {

constexpr double kParamSlack = 1e-12;
constexpr double kDomainSlack = 1e-12;

double sq(double v) { return v * v; }

[[noreturn]] void domain_error(const std::string& what) { throw Error(ErrorKind::DomainError, what); }

std::string m2_condition(const FamilyParams& p) {
  return sq(p.a) - sq(p.k) > 0 ? std::string{} : "m2 requires a^2 - k^2 > 0";
}
std::string m3_condition(const FamilyParams& p) {
  if (!(sq(p.a) - sq(p.k) < 0)) return "m3 requires a^2 - k^2 < 0";
  return {};
}
std::string m4_condition(const FamilyParams& p) {
  if (!(sq(p.a) - sq(p.k) - p.a < 0)) return "m4 requires a^2 - k^2 - a < 0";
  if (!(sq(p.k) <= 4.0 * (1.0 + p.a))) return "m4 requires k^2 <= 4(1 + a)";
  return {};
}

}  // namespace

double FamilyParams::k_max(double a) { return (1.0 + a) / std::sqrt(2.0); }

FamilyParams FamilyParams::make(double a, double k) {
  if (!std::isfinite(a) || !std::isfinite(k)) throw Error(ErrorKind::InvalidParams, "a and k must be finite");
  if (a < 0.0 || a > 1.0) throw Error(ErrorKind::InvalidParams, "a must lie in [0, 1]");
  if (k < 0.0) throw Error(ErrorKind::InvalidParams, "k must be nonnegative");
  if (k > k_max(a) + kParamSlack) throw Error(ErrorKind::InvalidParams, "k must not exceed (1 + a)/sqrt(2)");
  return {a, k};
}

UnitalQubitMapd make_map(const FamilyParams& p) {
  UnitalQubitMapd m;
  m.lambda << p.a, 0.0, 0.0;
  m.T = Eigen::Vector3d(0.0, p.k, p.k).asDiagonal();
  return m;
}

double F(const FamilyParams& p, double x, double y) {
  if (!(x >= -kDomainSlack && y >= -kDomainSlack && x + y <= 1.0 + kDomainSlack))
    throw Error(ErrorKind::OutOfDomain, "F is defined on x, y >= 0, x + y <= 1");
  const double a = p.a, k = p.k;
  const double radicand = std::max(0.0, sq(k) / 4.0 * sq(y) + x * (1.0 - x + a * y));
  return 2.0 * k * std::sqrt(radicand) + a * y + (sq(a) - sq(k)) * x;
}

double m1(const FamilyParams& p) { return sq(p.k) + p.a; }

double m2(const FamilyParams& p) {
  if (auto why = m2_condition(p); !why.empty()) domain_error(why);
  return sq(p.a) - sq(p.k);
}

double m3(const FamilyParams& p) {
  if (auto why = m3_condition(p); !why.empty()) domain_error(why);
  const double d = sq(p.a) - sq(p.k);
  const double s = 4.0 * sq(p.k) + sq(d);
  return (4.0 * sq(p.k) - sq(d)) / (2.0 * std::sqrt(s * s * s)) + d / 2.0;
}

double m4(const FamilyParams& p) {
  if (auto why = m4_condition(p); !why.empty()) domain_error(why);
  const double a = p.a, k = p.k;
  const double k2 = sq(k);
  const double e = sq(a) - k2 - a;
  const double c = k2 / 4.0 - (1.0 + a);
  const double d1 = sq(e) + k2 * (4.0 + 4.0 * a - k2);
  const double d2 = sq(e) + k2 * (4.0 * (1.0 + a) - k2);
  const double num = (a * (a * sq(a - 1.0) + 2.0 * k2 * (3.0 - a))) * sq(1.0 + a) + sq(k2) * (1.0 + a);
  return 2.0 * k2 * k * (1.0 + a) / std::sqrt(d1) - (1.0 + a) * e / (2.0 * c) + sq(a) - k2 +
         std::sqrt(num / d2) / (2.0 * c);
}

Maxima maxima(const FamilyParams& p) {
  Maxima out;
  out.m1 = m1(p);
  out.m2_reason = m2_condition(p);
  out.m3_reason = m3_condition(p);
  out.m4_reason = m4_condition(p);
  if (out.m2_reason.empty()) out.m2 = m2(p);
  if (out.m3_reason.empty()) out.m3 = m3(p);
  if (out.m4_reason.empty()) out.m4 = m4(p);
  return out;
}

double m4_at_a_one(double k) {
  const double k2 = sq(k);
  return ((k2 - 8.0) * (std::sqrt(2.0) * k2 + 2.0) + 4.0 * (2.0 * k2 + std::pow(2.0, -0.25) * std::sqrt(k * (8.0 + k2)))) /
         (2.0 * (k2 - 8.0));
}

double m4_at_a_half(double k) {
  const double k2 = sq(k);
  const double s = sq(k2 + 0.25);
  const double den = s + k2 * (6.0 - k2);
  const double inner = (0.75 * (s + k2 * (2.0 - k2)) + 1.5 * sq(k2)) / den;
  return 3.0 * k2 * k / std::sqrt(den) + (2.0 * std::sqrt(inner) + 3.0 * (k2 + 0.25)) / (k2 - 6.0) + 0.25 - k2;
}

double critical_x(const FamilyParams& p) {
  const double d = sq(p.a) - sq(p.k);
  if (d == 0.0) domain_error("critical_x requires a^2 != k^2");
  const double pp = sq(p.k) / (4.0 * sq(p.k) + sq(d));
  const double disc = 1.0 - 4.0 * pp;
  if (disc < 0.0) domain_error("critical_x requires 1 - 4p >= 0");
  return d > 0 ? (1.0 + std::sqrt(disc)) / 2.0 : (1.0 - std::sqrt(disc)) / 2.0;
}

double critical_y(const FamilyParams& p) {
  if (auto why = m4_condition(p); !why.empty()) domain_error("critical_y: " + why.substr(3));
  const double a = p.a, k2 = sq(p.k);
  const double e = sq(a) - k2 - a;
  const double q = k2 * (1.0 + a) / (sq(e) + k2 * (4.0 * a + 4.0 - k2));
  const double c = k2 / 4.0 - (1.0 + a);
  const double disc = sq(1.0 + a) + 4.0 * q * c;
  if (disc < 0.0) domain_error("critical_y: negative discriminant");
  return (-(1.0 + a) + std::sqrt(disc)) / (2.0 * c);
}

double critical_y_lower_bound(const FamilyParams& p) { return (1.0 + p.a) / (2.0 + 2.0 * p.a - sq(p.k) / 2.0); }

double hypotenuse_F(const FamilyParams& p, double y) { return F(p, 1.0 - y, y); }

double hypotenuse_slope(const FamilyParams& p, double y, double h) {
  const double lo = std::max(0.0, y - h), hi = std::min(1.0, y + h);
  return (hypotenuse_F(p, hi) - hypotenuse_F(p, lo)) / (hi - lo);
}

bool theorem_predicate(const FamilyParams& p) {
  const double bound = 1.0 - sq(p.k);
  if (!(sq(p.a) - sq(p.k) < p.a)) return false;
  if (!(m1(p) <= bound)) return false;
  if (m4_condition(p).empty() && !(m4(p) <= bound)) return false;
  return true;
}

bool example_5_1_predicate(double k) {
  if (!(k >= 0.0 && k <= std::sqrt(2.0) + kParamSlack))
    throw Error(ErrorKind::InvalidParams, "example_5_1_predicate needs 0 <= k <= sqrt(2)");
  return m4_at_a_one(k) <= 1.0 - sq(k);
}

ReducedSides reduced_inequality(const FamilyParams& p, double r1, double r2, double r3, double gamma1) {
  if (r1 < 0 || r2 < 0 || r3 < 0 || std::abs(sq(r1) + sq(r2) + sq(r3) - 1.0) > 1e-9)
    throw Error(ErrorKind::NotNormalized, "need r_i >= 0 with r1^2 + r2^2 + r3^2 = 1");
  const double a = p.a, k = p.k;
  const double s = std::sin(gamma1);
  ReducedSides out;
  const double radicand = sq(k) * sq(r2) * sq(r3) * sq(s) + sq(r1) * (sq(r2) + sq(r3) + 2.0 * r2 * r3 * a * s);
  out.lhs = 2.0 * k * std::sqrt(std::max(0.0, radicand));
  out.rhs = 1.0 - 2.0 * a * r2 * r3 * s - sq(a) * sq(r1) - sq(k) * (sq(r2) + sq(r3));
  return out;
}

FMaximum numeric_F_max(const FamilyParams& p, const OptimizerConfig& cfg) {
  auto f = [&](const Eigen::VectorXd& v) { return F(p, v(0), v(1)); };
  const auto res = maximize(f, domain::Triangle{}, cfg);

  FMaximum best;
  best.value = res.value;
  best.argmax = Eigen::Vector2d(res.argmax(0), res.argmax(1));
  auto consider = [&](double x, double y) {
    const double v = F(p, x, y);
    if (v > best.value) {
      best.value = v;
      best.argmax = {x, y};
    }
  };
  const int n = static_cast<int>(std::lround(1.0 / kEdgeScanStep));
  for (int i = 0; i <= n; ++i) {
    const double t = static_cast<double>(i) / n;
    consider(0.0, t);
    consider(t, 0.0);
    consider(1.0 - t, t);
  }
  const double x = best.argmax(0), y = best.argmax(1);
  best.on_hypotenuse = x > 1e-6 && y > 1e-6 && std::abs(x + y - 1.0) <= 1e-6;
  return best;
}

HypotenuseAudit audit_hypotenuse(const FamilyParams& p) {
  HypotenuseAudit out;
  out.lower_bound = critical_y_lower_bound(p);
  if (m4_condition(p).empty()) {
    out.m4 = m4(p);
    const double y = critical_y(p);
    out.y_c = y;
    if (y >= 0.0 && y <= 1.0) {
      out.edge_value_at_y_c = hypotenuse_F(p, y);
      out.slope_at_y_c = hypotenuse_slope(p, y);
    }
  }
  const int n = static_cast<int>(std::lround(1.0 / kEdgeScanStep));
  out.edge_max = hypotenuse_F(p, 0.0);
  for (int i = 1; i <= n; ++i) {
    const double y = static_cast<double>(i) / n;
    const double v = hypotenuse_F(p, y);
    if (v > out.edge_max) {
      out.edge_max = v;
      out.edge_argmax_y = y;
    }
  }
  return out;
}

int grid_count(double lo, double hi, double step) {
  if (hi < lo) return 0;
  return static_cast<int>(std::floor((hi - lo) / step + 1e-9)) + 1;
}

std::vector<RegionCell> scan_region(const ScanRange& r, const OptimizerConfig& cfg, unsigned threads) {
  if (!(r.step > 0.0) || !std::isfinite(r.step)) throw Error(ErrorKind::InvalidRange, "step must be positive");
  for (double v : {r.a_min, r.a_max, r.k_min, r.k_max})
    if (!std::isfinite(v)) throw Error(ErrorKind::InvalidRange, "range bounds must be finite");
  const int na = grid_count(r.a_min, r.a_max, r.step);
  const int nk = grid_count(r.k_min, r.k_max, r.step);
  if (na > 0 && (r.a_min < 0.0 || r.a_max > 1.0)) throw Error(ErrorKind::InvalidRange, "a must lie in [0, 1]");
  if (nk > 0 && r.k_min < 0.0) throw Error(ErrorKind::InvalidRange, "k must be nonnegative");

  struct Job {
    double a, k;
    std::uint64_t index;
  };
  std::vector<Job> jobs;
  for (int i = 0; i < na; ++i) {
    const double a = std::min(r.a_min + i * r.step, 1.0);
    for (int j = 0; j < nk; ++j) {
      const double k = r.k_min + j * r.step;
      if (k > FamilyParams::k_max(a) + kParamSlack) continue;
      jobs.push_back({a, k, static_cast<std::uint64_t>(i) * static_cast<std::uint64_t>(nk) + static_cast<std::uint64_t>(j)});
    }
  }

  std::vector<RegionCell> cells(jobs.size());
  auto run = [&](std::size_t idx) {
    const Job& job = jobs[idx];
    const FamilyParams p = FamilyParams::make(job.a, job.k);
    const UnitalQubitMapd phi = make_map(p);
    OptimizerConfig cell_cfg = cfg;
    cell_cfg.seed = derive_seed(cfg.seed, job.index);

    RegionCell& c = cells[idx];
    c.a = p.a;
    c.k = p.k;
    const auto pos = is_positive(phi, cell_cfg);
    c.positive = pos.positive;
    c.positivity_margin = pos.margin;
    c.thm46 = theorem_predicate(p);
    const Maxima m = maxima(p);
    c.m1 = m.m1;
    c.m4 = m.m4;
    const KSReport ks = verify_ks(phi, cell_cfg);
    c.ks_numeric = ks.verdict;
    c.min_defect_eig = ks.min_defect_eigenvalue;
  };

  unsigned workers = threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : threads;
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(1, jobs.size())));
  if (workers <= 1) {
    for (std::size_t i = 0; i < jobs.size(); ++i) run(i);
    return cells;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(workers);
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::size_t i = next++; i < jobs.size(); i = next++) run(i);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return cells;
}

void write_region_csv(std::ostream& out, const std::vector<RegionCell>& cells) {
  out << kRegionCsvHeader << '\n';
  std::ostringstream row;
  row << std::setprecision(9);
  for (const auto& c : cells) {
    row.str({});
    row << c.a << ',' << c.k << ',' << (c.positive ? 1 : 0) << ',' << c.positivity_margin << ','
        << (c.thm46 ? 1 : 0) << ',' << c.m1 << ',';
    if (c.m4)
      row << *c.m4;
    else
      row << "nan";
    row << ',' << to_string(c.ks_numeric) << ',' << c.min_defect_eig << '\n';
    out << row.str();
  }
}

}  // namespace uks::family
