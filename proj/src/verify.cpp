#include "steiner/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>

namespace steiner {

namespace {

constexpr double kPi = std::numbers::pi_v<double>;

double combined_se(double a, double b) { return std::sqrt(a * a + b * b); }

}  // namespace

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t salt) {
  std::uint64_t z = master + 0x9E3779B97F4A7C15ull * (salt + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

VerifyReport check_symmetrization_monotonicity(const Polygon& D,
                                               const Line& line, Point2 x0,
                                               StableIndex idx,
                                               const SimParams& params) {
  const Polygon sym = steiner_symmetrize(D, line);
  const Point2 x_sym = project_point(x0, line);

  const ExitEstimate before = estimate_exit_probability(D, x0, idx, params);
  const ExitEstimate after =
      estimate_exit_probability(sym, x_sym, idx, params);

  VerifyReport rep;
  rep.name = "symmetrization-monotonicity";
  rep.seed = params.seed;
  rep.statistic = after.p_hat - before.p_hat;
  rep.threshold = -3.0 * combined_se(before.std_err, after.std_err);
  rep.passed = rep.statistic >= rep.threshold;
  rep.details["p_domain"] = before.p_hat;
  rep.details["se_domain"] = before.std_err;
  rep.details["p_symmetrized"] = after.p_hat;
  rep.details["se_symmetrized"] = after.std_err;
  rep.details["alpha"] = idx.alpha;
  rep.details["t"] = params.t;
  return rep;
}

VerifyReport check_schedule_convergence(
    const std::vector<ScheduleState>& schedule, const Polygon& target,
    StableIndex idx, const SimParams& params, double hausdorff_tol) {
  if (schedule.empty())
    throw std::invalid_argument("schedule must be non-empty");

  VerifyReport rep;
  rep.name = "schedule-convergence";
  rep.seed = params.seed;

  std::vector<double> dists;
  dists.reserve(schedule.size());
  for (const auto& st : schedule)
    dists.push_back(hausdorff_distance(st.polygon, target));
  const double d_final = dists.back();

  std::vector<ExitEstimate> est;
  est.reserve(schedule.size());
  for (const auto& st : schedule)
    est.push_back(
        estimate_exit_probability(st.polygon, st.tracked, idx, params));

  double min_margin = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i + 1 < est.size(); ++i) {
    const double margin =
        est[i + 1].p_hat - est[i].p_hat +
        3.0 * combined_se(est[i].std_err, est[i + 1].std_err);
    min_margin = std::min(min_margin, margin);
  }

  const ExitEstimate limit = estimate_exit_probability(
      target, schedule.back().tracked, idx, params);
  const double gap = std::abs(est.back().p_hat - limit.p_hat);
  const double gap_tol = 3.0 * combined_se(est.back().std_err, limit.std_err);

  rep.statistic = gap;
  rep.threshold = gap_tol;
  rep.passed = d_final <= hausdorff_tol &&
               (est.size() < 2 || min_margin >= 0.0) && gap <= gap_tol;
  rep.details["hausdorff_final"] = d_final;
  rep.details["hausdorff_tol"] = hausdorff_tol;
  rep.details["hausdorff_initial"] = dists.front();
  rep.details["min_monotonicity_margin"] =
      est.size() < 2 ? 0.0 : min_margin;
  rep.details["p_final"] = est.back().p_hat;
  rep.details["p_limit"] = limit.p_hat;
  rep.details["se_final"] = est.back().std_err;
  rep.details["se_limit"] = limit.std_err;
  rep.details["states"] = static_cast<double>(schedule.size());
  rep.details["alpha"] = idx.alpha;
  return rep;
}

namespace {

std::vector<Point2> interior_grid(const Polygon& P, int resolution) {
  std::vector<Point2> pts;
  if (P.size() == 3) {
    // barycentric: weights (i, j, k)/(resolution + 2), all >= 1
    const int s = resolution + 2;
    for (int i = 1; i < s; ++i)
      for (int j = 1; i + j < s; ++j) {
        const int k = s - i - j;
        const double wi = static_cast<double>(i) / s;
        const double wj = static_cast<double>(j) / s;
        const double wk = static_cast<double>(k) / s;
        pts.push_back(P.vertex(0) * wi + P.vertex(1) * wj + P.vertex(2) * wk);
      }
  } else if (P.size() == 4) {
    for (int i = 1; i <= resolution; ++i)
      for (int j = 1; j <= resolution; ++j) {
        const double u = static_cast<double>(i) / (resolution + 1);
        const double v = static_cast<double>(j) / (resolution + 1);
        pts.push_back(P.vertex(0) * ((1 - u) * (1 - v)) +
                      P.vertex(1) * (u * (1 - v)) + P.vertex(2) * (u * v) +
                      P.vertex(3) * ((1 - u) * v));
      }
  } else {
    throw unsupported_input("interior grid supports triangles and quads");
  }
  return pts;
}

}  // namespace

VerifyReport check_polya_szego(int n, const Polygon& P, StableIndex idx,
                               const SimParams& params, int grid_resolution,
                               std::int64_t center_paths) {
  if (n != 3 && n != 4)
    throw unsupported_input("check_polya_szego supports n = 3 and n = 4");
  if (static_cast<int>(P.size()) != n)
    throw std::invalid_argument("polygon does not match the stated n");
  if (grid_resolution < 1)
    throw std::invalid_argument("grid_resolution must be >= 1");
  if (center_paths <= 0) center_paths = 100 * params.n;

  const Polygon regular = regular_polygon(n, area(P));
  const auto grid = interior_grid(P, grid_resolution);

  double p_max = -1.0, se_max = 0.0;
  Point2 argmax{};
  for (std::size_t g = 0; g < grid.size(); ++g) {
    SimParams sp = params;
    sp.seed = derive_seed(params.seed, g);
    const ExitEstimate e = estimate_exit_probability(P, grid[g], idx, sp);
    if (e.p_hat > p_max) {
      p_max = e.p_hat;
      se_max = e.std_err;
      argmax = grid[g];
    }
  }

  SimParams cp = params;
  cp.n = center_paths;
  cp.seed = derive_seed(params.seed, 0xC0FFEE);
  const ExitEstimate center =
      estimate_exit_probability(regular, {0.0, 0.0}, idx, cp);

  VerifyReport rep;
  rep.name = n == 3 ? "polya-szego-triangle" : "polya-szego-quadrilateral";
  rep.seed = params.seed;
  rep.statistic = p_max - center.p_hat;
  rep.threshold = 3.0 * combined_se(se_max, center.std_err);
  rep.passed = rep.statistic <= rep.threshold;
  rep.details["grid_max"] = p_max;
  rep.details["grid_max_se"] = se_max;
  rep.details["grid_argmax_x"] = argmax.x;
  rep.details["grid_argmax_y"] = argmax.y;
  rep.details["grid_points"] = static_cast<double>(grid.size());
  rep.details["grid_resolution"] = grid_resolution;
  rep.details["p_center"] = center.p_hat;
  rep.details["se_center"] = center.std_err;
  rep.details["alpha"] = idx.alpha;
  rep.details["t"] = params.t;
  rep.notes.push_back(
      "grid max is a lower bound for the true sup over the polygon; "
      "resolution recorded in details");
  return rep;
}

VerifyReport check_eigenvalue_ordering(int n, const Polygon& P,
                                       const SimParams& params, double t1,
                                       double t2) {
  if (n != 3 && n != 4)
    throw unsupported_input("check_eigenvalue_ordering supports n = 3, 4");
  if (static_cast<int>(P.size()) != n)
    throw std::invalid_argument("polygon does not match the stated n");
  const double a = area(P);
  if (t1 <= 0.0) t1 = 0.3 * a;
  if (t2 <= 0.0) t2 = 0.5 * a;

  const StableIndex brownian(2.0);
  const Polygon regular = regular_polygon(n, a);

  SimParams p1 = params;
  p1.seed = derive_seed(params.seed, 1);
  const EigenvalueEstimate lam_p =
      estimate_eigenvalue(P, centroid(P), brownian, p1, t1, t2);
  SimParams p2 = params;
  p2.seed = derive_seed(params.seed, 2);
  const EigenvalueEstimate lam_r =
      estimate_eigenvalue(regular, {0.0, 0.0}, brownian, p2, t1, t2);

  VerifyReport rep;
  rep.name = "eigenvalue-ordering";
  rep.seed = params.seed;
  rep.statistic = lam_p.lambda_hat - lam_r.lambda_hat;
  rep.threshold = -3.0 * combined_se(lam_p.std_err, lam_r.std_err);
  bool ok = rep.statistic >= rep.threshold;
  rep.details["lambda_polygon"] = lam_p.lambda_hat;
  rep.details["lambda_polygon_se"] = lam_p.std_err;
  rep.details["lambda_regular"] = lam_r.lambda_hat;
  rep.details["lambda_regular_se"] = lam_r.std_err;
  rep.details["t1"] = t1;
  rep.details["t2"] = t2;
  if (n == 4) {
    const double closed = kPi * kPi / a;
    rep.details["lambda_square_closed_form"] = closed;
    const double rel = std::abs(lam_r.lambda_hat - closed) / closed;
    rep.details["square_rel_deviation"] = rel;
    ok = ok && rel <= 0.10;
  }
  rep.passed = ok;
  return rep;
}

VerifyReport check_sampler_calibration(StableIndex idx,
                                       const SimParams& params) {
  const double t = params.t;
  const std::int64_t n = params.n;
  const double alpha = idx.alpha;

  VerifyReport rep;
  rep.name = "sampler-calibration";
  rep.seed = params.seed;
  rep.details["alpha"] = alpha;
  rep.details["t"] = t;
  rep.details["n"] = static_cast<double>(n);

  double worst = 0.0;
  auto record = [&](const std::string& key, double violation_ratio,
                    double value) {
    rep.details[key] = value;
    rep.details[key + "_ratio"] = violation_ratio;
    worst = std::max(worst, violation_ratio);
  };

  // characteristic function of stable_step at a few frequencies, plus the
  // per-coordinate variance at alpha = 2 against 2t (1% tolerance)
  {
    RngStream rng(derive_seed(params.seed, 11), 0);
    const std::array<double, 3> freq = {0.5, 1.0, 2.0};
    std::array<double, 3> cs{}, cs2{};
    double var_acc = 0.0;
    for (std::int64_t i = 0; i < n; ++i) {
      const Vec2 x = stable_step(t, idx, rng);
      for (std::size_t f = 0; f < freq.size(); ++f) {
        const double c = std::cos(freq[f] * x.x);
        cs[f] += c;
        cs2[f] += c * c;
      }
      var_acc += x.x * x.x + x.y * x.y;
    }
    for (std::size_t f = 0; f < freq.size(); ++f) {
      const double mean = cs[f] / n;
      const double se =
          std::sqrt(std::max(0.0, cs2[f] / n - mean * mean) / n);
      const double expect = std::exp(-t * std::pow(freq[f], alpha));
      const double z = std::abs(mean - expect) / std::max(se, 1e-300);
      record("charfn_xi_" + std::to_string(f), z / 3.0, mean);
    }
    if (alpha == 2.0) {
      const double vhat = var_acc / (2.0 * n);
      const double rel = std::abs(vhat - 2.0 * t) / (2.0 * t);
      record("variance_per_coordinate", rel / 0.01, vhat);
    }
  }

  // Gaussian step variance against t (1% tolerance)
  {
    RngStream rng(derive_seed(params.seed, 13), 0);
    double acc = 0.0;
    for (std::int64_t i = 0; i < n; ++i) {
      const Vec2 g = gaussian_step(t, rng);
      acc += g.x * g.x + g.y * g.y;
    }
    const double vhat = acc / (2.0 * n);
    record("gaussian_variance", std::abs(vhat - t) / t / 0.01, vhat);
  }

  // subordinator Laplace transform (alpha < 2 only)
  if (alpha < 2.0) {
    RngStream rng(derive_seed(params.seed, 17), 0);
    const std::array<double, 3> lam = {0.5, 1.0, 2.0};
    std::array<double, 3> ls{}, ls2{};
    for (std::int64_t i = 0; i < n; ++i) {
      const double s = stable_subordinator_step(t, alpha / 2.0, rng);
      for (std::size_t f = 0; f < lam.size(); ++f) {
        const double e = std::exp(-lam[f] * s);
        ls[f] += e;
        ls2[f] += e * e;
      }
    }
    for (std::size_t f = 0; f < lam.size(); ++f) {
      const double mean = ls[f] / n;
      const double se =
          std::sqrt(std::max(0.0, ls2[f] / n - mean * mean) / n);
      const double expect = std::exp(-t * std::pow(lam[f], alpha / 2.0));
      const double z = std::abs(mean - expect) / std::max(se, 1e-300);
      record("laplace_lambda_" + std::to_string(f), z / 3.0, mean);
    }
  }

  rep.statistic = worst;
  rep.threshold = 1.0;
  rep.passed = worst <= 1.0;
  return rep;
}

}  // namespace steiner
