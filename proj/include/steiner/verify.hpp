#pragma once
/**
 * Statistical verification of the symmetrization inequalities at desk scale:
 * exit-probability monotonicity under one symmetrization, convergence along
 * schedules, the regular-polygon extremality for n = 3, 4, eigenvalue
 * ordering, and sampler calibration.
 *
 * Every check is deterministic given its seed (sub-seeds are derived from
 * it), and reruns reproduce statistics bit-exactly. One-sided 3-standard-
 * error thresholds are used where the underlying inequality is one-sided.
 */

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "steiner/geometry.hpp"
#include "steiner/schedules.hpp"
#include "steiner/stochastic.hpp"

namespace steiner {

struct VerifyReport {
  std::string name;
  bool passed = false;
  double statistic = 0.0;
  double threshold = 0.0;
  std::map<std::string, double> details;
  std::vector<std::string> notes;
  std::uint64_t seed = 0;
};

/// p(D#, x#) >= p(D, x) - 3 se, with (D#, x#) built by steiner_symmetrize
/// and project_point. Both sides share paths (common random numbers);
/// the threshold uses the conservative independent-error combination.
VerifyReport check_symmetrization_monotonicity(const Polygon& D,
                                               const Line& line, Point2 x0,
                                               StableIndex idx,
                                               const SimParams& params);

/// Along a schedule: (i) Hausdorff distance to `target` ends below
/// `hausdorff_tol`; (ii) the exit-probability sequence at (D_m, x_m) is
/// non-decreasing within 3 combined standard errors; (iii) the final
/// estimate matches the target-domain estimate (at the final tracked point)
/// within 3 combined standard errors. `target` must already be pose-aligned
/// to the schedule's limit.
VerifyReport check_schedule_convergence(const std::vector<ScheduleState>& schedule,
                                        const Polygon& target, StableIndex idx,
                                        const SimParams& params,
                                        double hausdorff_tol);

/// sup-versus-center comparison of Corollary-style extremality: estimates
/// p(P, x) over an interior grid (barycentric for triangles, bilinear for
/// quadrilaterals; `grid_resolution` values per axis) and requires
/// max_grid <= p(R_n, 0) + 3 combined standard errors, where R_n is the
/// regular n-gon of equal area. The grid maximum is only a lower bound for
/// the true supremum; the resolution is part of the report.
/// `center_paths` defaults to 100 * params.n.
VerifyReport check_polya_szego(int n, const Polygon& P, StableIndex idx,
                               const SimParams& params, int grid_resolution,
                               std::int64_t center_paths = 0);

/// Log-slope eigenvalue ordering lambda(P) >= lambda(R_n) - 3 se for
/// Brownian motion (alpha = 2). Horizons default to t1 = 0.3 area(P),
/// t2 = 0.5 area(P). For n = 4 the regular-polygon estimate is also checked
/// against the closed form pi^2 / area within 10%.
VerifyReport check_eigenvalue_ordering(int n, const Polygon& P,
                                       const SimParams& params, double t1 = 0.0,
                                       double t2 = 0.0);

/// Sampler calibration: per-coordinate variance 2t at alpha = 2 (within 1%),
/// empirical characteristic function against exp(-t |xi|^alpha), and the
/// subordinator's empirical Laplace transform against exp(-t lambda^{alpha/2})
/// for alpha < 2, each within 3 standard errors. The statistic is the worst
/// violation ratio (1 = at threshold).
VerifyReport check_sampler_calibration(StableIndex idx, const SimParams& params);

/// Deterministic sub-seed derivation used by the checks (splitmix64 mix).
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t salt);

}  // namespace steiner
