#pragma once
/**
 * Samplers for Brownian and symmetric alpha-stable increments (via
 * subordination), Monte Carlo first-exit estimation on polygons from the
 * discrete path skeleton, exact interval/rectangle survival series used as
 * oracles, and the log-slope eigenvalue estimator.
 *
 * Normalizations:
 * - gaussian_step(t) has independent N(0, t) coordinates, matching the heat
 *   kernel (2 pi t)^{-d/2} exp(-|x-y|^2 / 2t) of the half-Laplacian.
 * - stable_subordinator_step(t, b) has Laplace transform exp(-t lambda^b).
 * - stable_step(t, alpha) has characteristic function exp(-t |xi|^alpha),
 *   realized as a Gaussian step at time 2*sigma with sigma the subordinator
 *   increment of index alpha/2 (sigma = t degenerately at alpha = 2).
 * - estimate_* at alpha = 2 use gaussian_step directly, so Brownian exit
 *   probabilities and eigenvalues carry the half-Laplacian normalization
 *   that the interval/rectangle oracles implement; the alpha -> 2 stable
 *   family differs from this by a fixed time dilation only.
 *
 * Path simulation is chunked (4096 paths per chunk, one RNG stream per
 * chunk) and reduced in fixed chunk order, so estimates are bit-identical
 * for a given seed regardless of thread count or execution policy.
 */

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "steiner/geometry.hpp"
#include "steiner/rng.hpp"

namespace steiner {

/// Estimate refused: survival probability not resolvable at the requested
/// sample size.
struct insufficient_samples : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Stability index alpha in (0, 2].
struct StableIndex {
  double alpha;
  explicit StableIndex(double a) : alpha(a) {
    if (!(a > 0.0 && a <= 2.0))
      throw std::invalid_argument("stable index requires 0 < alpha <= 2");
  }
};

struct SimParams {
  double t = 1.0;            // time horizon
  int m = 128;               // skeleton steps
  std::int64_t n = 100000;   // sample paths
  std::uint64_t seed = 1;    // master seed
  bool bridge_correction = false;  // honored only at alpha = 2
};

struct ExitEstimate {
  double p_hat = 0.0;
  double std_err = 0.0;
  std::int64_t n = 0;
  int m = 0;
  double t = 0.0;
  double alpha = 0.0;
  std::uint64_t seed = 0;
  bool bridge = false;
};

struct EigenvalueEstimate {
  double lambda_hat = 0.0;
  double std_err = 0.0;  // delta-method
  ExitEstimate at_t1, at_t2;
};

enum class Exec { parallel, serial };

// ---------------------------------------------------------------------------
// Increment samplers (pure given the stream state)
// ---------------------------------------------------------------------------

/// 2-D Gaussian increment, independent coordinates, each N(0, t_step).
Vec2 gaussian_step(double t_step, RngStream& rng);

/// One-sided stable increment with E[exp(-lambda sigma)] =
/// exp(-t_step lambda^index), index in (0, 1). Kanter's representation.
double stable_subordinator_step(double t_step, double index, RngStream& rng);

/// Symmetric alpha-stable increment with characteristic function
/// exp(-t_step |xi|^alpha).
Vec2 stable_step(double t_step, StableIndex idx, RngStream& rng);

// ---------------------------------------------------------------------------
// Exit-probability estimation
// ---------------------------------------------------------------------------

/// Skeleton Monte Carlo estimate of P_x0(tau_D > t): a path survives iff all
/// m skeleton positions at times j*t/m lie in the closed polygon. Upward
/// biased for finite m; exact in the m -> infinity limit. With
/// bridge_correction (alpha = 2 only) each surviving step is weighted by
/// prod_edges (1 - exp(-2 d_j d_{j+1} / t_m)) using perpendicular distances
/// to the edges' supporting lines, each factor clamped to [0, 1].
/// Returns exactly 0 when x0 is outside the closed polygon.
ExitEstimate estimate_exit_probability(const Polygon& D, Point2 x0,
                                       StableIndex idx, const SimParams& params,
                                       Exec exec = Exec::parallel);

/// Multi-horizon estimate over one set of paths. t_list must be sorted
/// ascending; params.m applies to the last horizon and earlier horizons are
/// evaluated on the same grid (survival through all skeleton times <= t_i),
/// so the returned curve is non-increasing path by path, hence exactly
/// monotone. The last entry matches the single-horizon estimate at the same
/// seed.
std::vector<ExitEstimate> estimate_exit_curve(const Polygon& D, Point2 x0,
                                              StableIndex idx,
                                              const SimParams& params,
                                              const std::vector<double>& t_list,
                                              Exec exec = Exec::parallel);

/// Log-slope estimator of the principal Dirichlet eigenvalue,
/// -(log p(t2) - log p(t1)) / (t2 - t1), with a delta-method standard error
/// using the sample covariance of the per-path survival weights (the two
/// horizons share paths). Throws insufficient_samples unless both horizons
/// satisfy p_hat > 10 * std_err.
EigenvalueEstimate estimate_eigenvalue(const Polygon& D, Point2 x0,
                                       StableIndex idx, const SimParams& params,
                                       double t1, double t2,
                                       Exec exec = Exec::parallel);

// ---------------------------------------------------------------------------
// Exact oracles (half-Laplacian Brownian motion)
// ---------------------------------------------------------------------------

/// P_x(tau_(-a,a) > t) for 1-D Brownian motion with variance t, by Dirichlet
/// eigenfunction expansion. Terms are added until the first-omitted-term
/// bound drops below 1e-12 (or n_terms, if positive). Returns 0 for |x| >= a.
double interval_survival_series(double a, double x, double t, int n_terms = -1);

/// Survival probability in the centered L1 x L2 rectangle: product of two
/// interval series by coordinate independence. Returns 0 outside.
double rectangle_survival_exact(double L1, double L2, Point2 x0, double t);

}  // namespace steiner
