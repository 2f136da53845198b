#pragma once

// The two-parameter family lambda = (a, 0, 0), T = diag(0, k, k) and the
// closed-form boundary analysis of
//
//   F(x, y) = 2k sqrt(k^2 y^2 / 4 + x (1 - x + a y)) + a y + (a^2 - k^2) x
//
// on the triangle x, y >= 0, x + y <= 1.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "uks/ks.hpp"
#include "uks/maps.hpp"
#include "uks/numerics.hpp"

namespace uks::family {

/// 0 <= a <= 1 and 0 <= k <= (1 + a)/sqrt(2).
struct FamilyParams {
  double a = 0;
  double k = 0;

  /// Throws InvalidParams when the invariants fail.
  static FamilyParams make(double a, double k);
  static double k_max(double a);
};

UnitalQubitMapd make_map(const FamilyParams& p);

/// Throws OutOfDomain outside the triangle.
double F(const FamilyParams& p, double x, double y);

// Closed-form maxima. Each throws DomainError outside its validity region,
// naming the violated condition.

/// F(0, 1) = k^2 + a.
double m1(const FamilyParams& p);
/// F(1, 0) = a^2 - k^2; requires a^2 - k^2 > 0.
double m2(const FamilyParams& p);
/// Closed form for max F(x, 0); requires a^2 - k^2 < 0.
double m3(const FamilyParams& p);
/// Closed form for the maximum on x + y = 1; requires a^2 - k^2 - a < 0 and
/// k^2 <= 4 (1 + a).
double m4(const FamilyParams& p);

/// Reasons are empty when the value is defined.
struct Maxima {
  double m1 = 0;
  std::optional<double> m2, m3, m4;
  std::string m2_reason, m3_reason, m4_reason;
};
Maxima maxima(const FamilyParams& p);

/// m4 at a = 1 as the specialized closed form
///   ((k^2 - 8)(sqrt2 k^2 + 2) + 4 (2k^2 + 2^{-1/4} sqrt(k (8 + k^2)))) / (2 (k^2 - 8)).
double m4_at_a_one(double k);
/// m4 at a = 1/2 as the specialized closed form.
double m4_at_a_half(double k);

/// Root of x^2 - x + p = 0, p = k^2 / (4k^2 + (a^2 - k^2)^2), on the side
/// selected by the sign of a^2 - k^2.
double critical_x(const FamilyParams& p);
/// Closed-form critical point on x + y = 1 (parametrized by y).
double critical_y(const FamilyParams& p);
/// (1 + a) / (2 + 2a - k^2/2), the stated lower bound for the edge critical point.
double critical_y_lower_bound(const FamilyParams& p);

/// F restricted to x + y = 1, as a function of y.
double hypotenuse_F(const FamilyParams& p, double y);
/// d/dy of hypotenuse_F, central differences.
double hypotenuse_slope(const FamilyParams& p, double y, double h = 1e-6);

/// a^2 - k^2 < a, m1 <= 1 - k^2, and m4 <= 1 - k^2 whenever m4 is defined.
bool theorem_predicate(const FamilyParams& p);

/// The a = 1 inequality m4_at_a_one(k) <= 1 - k^2 (m1 dropped). 0 <= k <= sqrt(2).
bool example_5_1_predicate(double k);

struct ReducedSides {
  double lhs = 0;
  double rhs = 0;
};

/// Polar-form reduced inequality for |w| = 1, w0 = 0:
///   lhs = 2k sqrt(k^2 r2^2 r3^2 sin^2 g + r1^2 (r2^2 + r3^2 + 2 r2 r3 a sin g))
///   rhs = 1 - 2a r2 r3 sin g - a^2 r1^2 - k^2 (r2^2 + r3^2)
/// Throws NotNormalized unless r_i >= 0 and r1^2 + r2^2 + r3^2 = 1.
ReducedSides reduced_inequality(const FamilyParams& p, double r1, double r2, double r3, double gamma1);

struct FMaximum {
  double value = 0;
  Eigen::Vector2d argmax = Eigen::Vector2d::Zero();
  /// argmax lies strictly inside the x + y = 1 edge.
  bool on_hypotenuse = false;
};

inline constexpr double kEdgeScanStep = 1e-4;

/// Multistart maximization over the triangle plus the three edges scanned at
/// kEdgeScanStep.
FMaximum numeric_F_max(const FamilyParams& p, const OptimizerConfig& cfg = {});

/// Side-by-side record of the x + y = 1 closed forms against the numbers they
/// are supposed to describe.
struct HypotenuseAudit {
  std::optional<double> y_c;
  std::optional<double> m4;
  double lower_bound = 0;
  /// hypotenuse_F(y_c); compare with m4.
  std::optional<double> edge_value_at_y_c;
  std::optional<double> slope_at_y_c;
  /// Numeric maximum of hypotenuse_F and where it sits.
  double edge_max = 0;
  double edge_argmax_y = 0;
};
HypotenuseAudit audit_hypotenuse(const FamilyParams& p);

struct RegionCell {
  double a = 0;
  double k = 0;
  bool positive = false;
  double positivity_margin = 0;
  bool thm46 = false;
  double m1 = 0;
  std::optional<double> m4;
  KsVerdict ks_numeric = KsVerdict::NoViolationFound;
  double min_defect_eig = 0;
};

struct ScanRange {
  double a_min = 0, a_max = 1;
  double k_min = 0, k_max = 1.5;
  double step = 0.01;
};

/// Number of grid points lo, lo + step, ... <= hi (0 when hi < lo).
int grid_count(double lo, double hi, double step);

/// Evaluates every (a, k) grid cell with k <= (1 + a)/sqrt(2). Cells are
/// independent and run on `threads` workers (0 = hardware concurrency); each
/// cell seeds its searches from derive_seed(cfg.seed, cell index), so the
/// output does not depend on scheduling. Throws InvalidRange.
std::vector<RegionCell> scan_region(const ScanRange& range, const OptimizerConfig& cfg, unsigned threads = 0);

inline constexpr const char* kRegionCsvHeader = "a,k,positive,positivity_margin,thm46,m1,m4,ks_numeric,min_defect_eig";

/// Header plus one row per cell; reals with 9 significant digits, booleans as
/// 1/0, undefined m4 as nan.
void write_region_csv(std::ostream& out, const std::vector<RegionCell>& cells);

}  // namespace uks::family
