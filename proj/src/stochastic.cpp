#include "steiner/stochastic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace steiner {

namespace {

constexpr double kPi = std::numbers::pi_v<double>;
constexpr std::int64_t kChunk = 4096;  // paths per RNG stream

}  // namespace

Vec2 gaussian_step(double t_step, RngStream& rng) {
  if (!(t_step > 0.0))
    throw std::invalid_argument("gaussian_step requires t_step > 0");
  const double u1 = rng.uniform01();
  const double u2 = rng.uniform01();
  const double r = std::sqrt(-2.0 * t_step * std::log(u1));
  const double phi = 2.0 * kPi * u2;
  return {r * std::cos(phi), r * std::sin(phi)};
}

double stable_subordinator_step(double t_step, double index, RngStream& rng) {
  if (!(t_step > 0.0))
    throw std::invalid_argument("subordinator requires t_step > 0");
  if (!(index > 0.0 && index < 1.0))
    throw std::invalid_argument("subordinator index must lie in (0, 1)");

  // Kanter's representation of the one-sided stable law with Laplace
  // transform exp(-lambda^index), scaled by t^(1/index).
  double u = rng.uniform01();
  if (u == 1.0) u = 0.5;
  const double theta = kPi * u;  // (0, pi)
  const double w = std::max(-std::log(rng.uniform01()), 1e-300);

  const double b = index;
  const double log_b = (b * std::log(std::sin(b * theta)) -
                        std::log(std::sin(theta))) /
                           (1.0 - b) +
                       std::log(std::sin((1.0 - b) * theta));
  const double log_x = ((1.0 - b) / b) * (log_b - std::log(w));
  const double x = std::exp(std::min(log_x, 690.0));
  return std::pow(t_step, 1.0 / b) * x;
}

Vec2 stable_step(double t_step, StableIndex idx, RngStream& rng) {
  if (idx.alpha == 2.0) return gaussian_step(2.0 * t_step, rng);
  const double sigma = stable_subordinator_step(t_step, idx.alpha / 2.0, rng);
  return gaussian_step(2.0 * sigma, rng);
}

// ---------------------------------------------------------------------------
// Path kernel
// ---------------------------------------------------------------------------

namespace {

// Precomputed membership test. Convex polygons use the edge-normal test;
// general simple polygons fall back to even-odd crossing with a bounding box
// reject. The closed region is tested with a small inward slack so boundary
// points count as inside.
struct Probe {
  struct Edge {
    double nx, ny, c;  // outward normal; inside <=> nx*x + ny*y <= c
  };
  std::vector<Edge> edges;
  std::vector<Point2> verts;
  bool convex = false;
  double slack = 0.0;
  double xmin = 0, xmax = 0, ymin = 0, ymax = 0;

  explicit Probe(const Polygon& P) : verts(P.vertices()), convex(is_convex(P)) {
    const std::size_t n = verts.size();
    edges.reserve(n);
    double scale = 0.0;
    xmin = ymin = std::numeric_limits<double>::infinity();
    xmax = ymax = -xmin;
    for (const auto& v : verts) {
      xmin = std::min(xmin, v.x);
      xmax = std::max(xmax, v.x);
      ymin = std::min(ymin, v.y);
      ymax = std::max(ymax, v.y);
    }
    scale = std::max(xmax - xmin, ymax - ymin);
    slack = kGeomTol * scale;
    for (std::size_t i = 0; i < n; ++i) {
      const Point2 a = verts[i], b = verts[(i + 1) % n];
      const Vec2 d = b - a;
      const double len = d.norm();
      const double nx = d.y / len, ny = -d.x / len;
      edges.push_back({nx, ny, nx * a.x + ny * a.y});
    }
  }

  bool inside(Point2 p) const {
    if (convex) {
      for (const auto& e : edges)
        if (e.nx * p.x + e.ny * p.y > e.c + slack) return false;
      return true;
    }
    if (p.x < xmin - slack || p.x > xmax + slack || p.y < ymin - slack ||
        p.y > ymax + slack)
      return false;
    bool in = false;
    const std::size_t n = verts.size();
    for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
      const Point2 a = verts[j], b = verts[i];
      if ((b.y > p.y) != (a.y > p.y)) {
        const double xc = b.x + (p.y - b.y) * (a.x - b.x) / (a.y - b.y);
        if (p.x < xc) in = !in;
      }
    }
    return in;
  }

  // Signed distance to each edge's supporting line, positive inside.
  void line_distances(Point2 p, std::vector<double>& out) const {
    out.resize(edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i)
      out[i] = edges[i].c - (edges[i].nx * p.x + edges[i].ny * p.y);
  }
};

struct HorizonPlan {
  std::vector<double> t;
  std::vector<int> checkpoints;  // skeleton steps covered by each horizon
  double h = 0.0;
  int m = 0;
};

HorizonPlan make_plan(const std::vector<double>& t_list, int m) {
  if (t_list.empty()) throw std::invalid_argument("t_list must be non-empty");
  for (std::size_t i = 0; i < t_list.size(); ++i) {
    if (!(t_list[i] > 0.0)) throw std::invalid_argument("horizons must be > 0");
    if (i > 0 && !(t_list[i] > t_list[i - 1]))
      throw std::invalid_argument("t_list must be strictly ascending");
  }
  HorizonPlan plan;
  plan.t = t_list;
  plan.m = m;
  plan.h = t_list.back() / m;
  plan.checkpoints.reserve(t_list.size());
  for (double t : t_list) {
    const int k = static_cast<int>(
        std::floor(t * static_cast<double>(m) / t_list.back() + 1e-9));
    plan.checkpoints.push_back(std::min(k, m));
  }
  return plan;
}

struct Moments {
  std::vector<double> wsum, wsqsum;
  double cross_first_last = 0.0;
};

Moments run_paths(const Probe& probe, Point2 x0, StableIndex idx,
                  const SimParams& params, const HorizonPlan& plan,
                  bool bridge, Exec exec) {
  const std::size_t horizons = plan.t.size();
  const std::int64_t n_chunks = (params.n + kChunk - 1) / kChunk;
  const bool brownian = idx.alpha == 2.0;
  // fixed per-path draw budget in Philox blocks (one block = two uniforms)
  const std::uint64_t blocks_per_path =
      static_cast<std::uint64_t>(plan.m) * (brownian ? 1 : 2);

  std::vector<Moments> per_chunk(static_cast<std::size_t>(n_chunks));

  auto run_chunk = [&](std::int64_t chunk) {
    Moments acc;
    acc.wsum.assign(horizons, 0.0);
    acc.wsqsum.assign(horizons, 0.0);
    const std::int64_t lo = chunk * kChunk;
    const std::int64_t hi = std::min(params.n, lo + kChunk);
    std::vector<double> w(horizons, 0.0);
    std::vector<double> d_prev, d_next;

    for (std::int64_t p = lo; p < hi; ++p) {
      RngStream rng(params.seed, static_cast<std::uint64_t>(chunk),
                    static_cast<std::uint64_t>(p - lo) * blocks_per_path);
      Point2 pos = x0;
      double weight = 1.0;
      std::size_t ci = 0;
      while (ci < horizons && plan.checkpoints[ci] == 0) w[ci++] = weight;
      if (bridge) probe.line_distances(pos, d_prev);

      for (int j = 1; j <= plan.m && ci < horizons; ++j) {
        const Vec2 dx = brownian ? gaussian_step(plan.h, rng)
                                 : stable_step(plan.h, idx, rng);
        pos = pos + dx;
        if (!probe.inside(pos)) {
          weight = 0.0;
          while (ci < horizons) w[ci++] = 0.0;
          break;
        }
        if (bridge) {
          probe.line_distances(pos, d_next);
          double factor = 1.0;
          for (std::size_t e = 0; e < d_prev.size(); ++e) {
            const double f =
                1.0 - std::exp(-2.0 * d_prev[e] * d_next[e] / plan.h);
            factor *= std::clamp(f, 0.0, 1.0);
          }
          weight *= factor;
          std::swap(d_prev, d_next);
        }
        while (ci < horizons && plan.checkpoints[ci] == j) w[ci++] = weight;
      }

      for (std::size_t i = 0; i < horizons; ++i) {
        acc.wsum[i] += w[i];
        acc.wsqsum[i] += w[i] * w[i];
      }
      acc.cross_first_last += w.front() * w.back();
    }
    per_chunk[static_cast<std::size_t>(chunk)] = std::move(acc);
  };

#ifdef _OPENMP
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t c = 0; c < n_chunks; ++c) run_chunk(c);
  } else {
    for (std::int64_t c = 0; c < n_chunks; ++c) run_chunk(c);
  }
#else
  (void)exec;
  for (std::int64_t c = 0; c < n_chunks; ++c) run_chunk(c);
#endif

  // fixed-order reduction keeps results independent of thread count
  Moments total;
  total.wsum.assign(horizons, 0.0);
  total.wsqsum.assign(horizons, 0.0);
  for (const auto& c : per_chunk) {
    for (std::size_t i = 0; i < horizons; ++i) {
      total.wsum[i] += c.wsum[i];
      total.wsqsum[i] += c.wsqsum[i];
    }
    total.cross_first_last += c.cross_first_last;
  }
  return total;
}

void validate_params(const SimParams& params) {
  if (!(params.t > 0.0)) throw std::invalid_argument("horizon t must be > 0");
  if (params.m < 1) throw std::invalid_argument("skeleton steps m must be >= 1");
  if (params.n < 1) throw std::invalid_argument("path count n must be >= 1");
}

ExitEstimate make_estimate(const SimParams& params, double t, double wsum,
                           double wsqsum, bool bridge, double alpha) {
  ExitEstimate est;
  const double n = static_cast<double>(params.n);
  est.p_hat = wsum / n;
  if (bridge) {
    const double var = std::max(0.0, wsqsum / n - est.p_hat * est.p_hat);
    est.std_err = std::sqrt(var / n);
  } else {
    est.std_err = std::sqrt(est.p_hat * (1.0 - est.p_hat) / n);
  }
  est.n = params.n;
  est.m = params.m;
  est.t = t;
  est.alpha = alpha;
  est.seed = params.seed;
  est.bridge = bridge;
  return est;
}

}  // namespace

std::vector<ExitEstimate> estimate_exit_curve(const Polygon& D, Point2 x0,
                                              StableIndex idx,
                                              const SimParams& params,
                                              const std::vector<double>& t_list,
                                              Exec exec) {
  validate_params(params);
  const bool bridge = params.bridge_correction && idx.alpha == 2.0;
  const HorizonPlan plan = make_plan(t_list, params.m);

  std::vector<ExitEstimate> out;
  out.reserve(t_list.size());
  if (!contains(D, x0)) {
    for (double t : t_list) {
      ExitEstimate e = make_estimate(params, t, 0.0, 0.0, bridge, idx.alpha);
      e.std_err = 0.0;
      out.push_back(e);
    }
    return out;
  }

  const Probe probe(D);
  const Moments mom = run_paths(probe, x0, idx, params, plan, bridge, exec);
  for (std::size_t i = 0; i < t_list.size(); ++i)
    out.push_back(make_estimate(params, t_list[i], mom.wsum[i], mom.wsqsum[i],
                                bridge, idx.alpha));
  return out;
}

ExitEstimate estimate_exit_probability(const Polygon& D, Point2 x0,
                                       StableIndex idx, const SimParams& params,
                                       Exec exec) {
  return estimate_exit_curve(D, x0, idx, params, {params.t}, exec).front();
}

EigenvalueEstimate estimate_eigenvalue(const Polygon& D, Point2 x0,
                                       StableIndex idx, const SimParams& params,
                                       double t1, double t2, Exec exec) {
  if (!(0.0 < t1 && t1 < t2))
    throw std::invalid_argument("estimate_eigenvalue requires 0 < t1 < t2");
  validate_params(params);
  const bool bridge = params.bridge_correction && idx.alpha == 2.0;
  const HorizonPlan plan = make_plan({t1, t2}, params.m);

  if (!contains(D, x0))
    throw insufficient_samples("start point outside the domain");

  const Probe probe(D);
  const Moments mom = run_paths(probe, x0, idx, params, plan, bridge, exec);

  EigenvalueEstimate est;
  est.at_t1 = make_estimate(params, t1, mom.wsum[0], mom.wsqsum[0], bridge,
                            idx.alpha);
  est.at_t2 = make_estimate(params, t2, mom.wsum[1], mom.wsqsum[1], bridge,
                            idx.alpha);
  for (const auto& e : {est.at_t1, est.at_t2}) {
    if (!(e.p_hat > 0.0))
      throw insufficient_samples("no surviving paths at a horizon");
    if (!(e.p_hat > 10.0 * e.std_err))
      throw insufficient_samples(
          "survival probability not resolved to 10 standard errors");
  }

  const double n = static_cast<double>(params.n);
  const double p1 = est.at_t1.p_hat, p2 = est.at_t2.p_hat;
  est.lambda_hat = -(std::log(p2) - std::log(p1)) / (t2 - t1);
  const double v1 = std::max(0.0, mom.wsqsum[0] / n - p1 * p1);
  const double v2 = std::max(0.0, mom.wsqsum[1] / n - p2 * p2);
  const double c12 = mom.cross_first_last / n - p1 * p2;
  const double var_logdiff =
      std::max(0.0, v1 / (p1 * p1) + v2 / (p2 * p2) - 2.0 * c12 / (p1 * p2)) /
      n;
  est.std_err = std::sqrt(var_logdiff) / (t2 - t1);
  return est;
}

// ---------------------------------------------------------------------------
// Exact oracles
// ---------------------------------------------------------------------------

double interval_survival_series(double a, double x, double t, int n_terms) {
  if (!(a > 0.0)) throw std::invalid_argument("interval half-width must be > 0");
  if (!(t > 0.0)) throw std::invalid_argument("time must be > 0");
  if (std::abs(x) >= a) return 0.0;

  const double decay = kPi * kPi * t / (8.0 * a * a);
  const double phase = kPi * (x + a) / (2.0 * a);
  double acc = 0.0;
  const long max_terms = n_terms > 0 ? n_terms : 2000000;
  for (long j = 0; j < max_terms; ++j) {
    const double k = 2.0 * j + 1.0;
    acc += (4.0 / (k * kPi)) * std::sin(k * phase) * std::exp(-k * k * decay);
    if (n_terms <= 0) {
      const double k_next = k + 2.0;
      if ((4.0 / (k_next * kPi)) * std::exp(-k_next * k_next * decay) < 1e-12)
        break;
    }
  }
  return acc;
}

double rectangle_survival_exact(double L1, double L2, Point2 x0, double t) {
  if (std::abs(x0.x) >= L1 / 2.0 || std::abs(x0.y) >= L2 / 2.0) return 0.0;
  return interval_survival_series(L1 / 2.0, x0.x, t) *
         interval_survival_series(L2 / 2.0, x0.y, t);
}

}  // namespace steiner
