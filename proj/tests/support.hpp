#pragma once
// Shared test utilities: fixture generators, independent oracles, and
// comparison helpers. Everything here is test-only and independent of the
// library implementation paths it checks.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "steiner/geometry.hpp"

namespace testsupport {

using steiner::Point2;
using steiner::Polygon;

inline constexpr double kPi = std::numbers::pi_v<double>;

// --------------------------------------------------------------------------
// comparisons
// --------------------------------------------------------------------------

// Every vertex of A has a match in B within tol and vice versa.
inline bool vertex_set_close(const Polygon& a, const Polygon& b, double tol) {
  auto covered = [&](const Polygon& from, const Polygon& to) {
    for (const auto& v : from.vertices()) {
      double best = std::numeric_limits<double>::infinity();
      for (const auto& w : to.vertices()) best = std::min(best, v.dist(w));
      if (best > tol) return false;
    }
    return true;
  };
  return a.size() == b.size() && covered(a, b) && covered(b, a);
}

// --------------------------------------------------------------------------
// random fixtures (deterministic given the engine state)
// --------------------------------------------------------------------------

inline Point2 random_point(std::mt19937_64& rng, double lo = -1.0,
                           double hi = 1.0) {
  std::uniform_real_distribution<double> u(lo, hi);
  return {u(rng), u(rng)};
}

// Star-shaped polygon about a random center: simple by construction, usually
// non-convex.
inline Polygon random_star_polygon(std::mt19937_64& rng, int min_v = 5,
                                   int max_v = 12) {
  std::uniform_int_distribution<int> nv(min_v, max_v);
  std::uniform_real_distribution<double> radius(0.35, 1.0);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  const int n = nv(rng);
  for (;;) {
    std::vector<double> angles(static_cast<std::size_t>(n));
    for (auto& a : angles) a = 2.0 * kPi * u01(rng);
    std::sort(angles.begin(), angles.end());
    bool spread = true;
    for (int i = 0; i < n; ++i) {
      const double gap = (i + 1 < n ? angles[i + 1] : angles[0] + 2 * kPi) -
                         angles[i];
      if (gap < 0.05) spread = false;
    }
    if (!spread) continue;
    const Point2 c = random_point(rng, -0.3, 0.3);
    std::vector<Point2> verts;
    verts.reserve(static_cast<std::size_t>(n));
    for (double a : angles) {
      const double r = radius(rng);
      verts.push_back({c.x + r * std::cos(a), c.y + r * std::sin(a)});
    }
    if (steiner::is_simple(verts)) return Polygon(std::move(verts));
  }
}

// Convex hull (monotone chain) of random points.
inline Polygon random_convex_polygon(std::mt19937_64& rng, int points = 10) {
  for (;;) {
    std::vector<Point2> pts;
    pts.reserve(static_cast<std::size_t>(points));
    for (int i = 0; i < points; ++i) pts.push_back(random_point(rng));
    std::sort(pts.begin(), pts.end(), [](Point2 a, Point2 b) {
      return a.x < b.x || (a.x == b.x && a.y < b.y);
    });
    auto half = [&](auto begin, auto end) {
      std::vector<Point2> h;
      for (auto it = begin; it != end; ++it) {
        while (h.size() >= 2 &&
               (h[h.size() - 1] - h[h.size() - 2])
                       .cross(*it - h[h.size() - 1]) <= 1e-12)
          h.pop_back();
        h.push_back(*it);
      }
      return h;
    };
    auto lower = half(pts.begin(), pts.end());
    auto upper = half(pts.rbegin(), pts.rend());
    lower.pop_back();
    upper.pop_back();
    lower.insert(lower.end(), upper.begin(), upper.end());
    if (lower.size() >= 3 && steiner::is_simple(lower) &&
        steiner::signed_area(lower) > 0.05)
      return Polygon(std::move(lower));
  }
}

inline Polygon random_triangle(std::mt19937_64& rng) {
  for (;;) {
    std::vector<Point2> v{random_point(rng), random_point(rng),
                          random_point(rng)};
    const double a = steiner::signed_area(v);
    if (std::abs(a) < 0.08) continue;
    if (a < 0) std::swap(v[1], v[2]);
    return Polygon(std::move(v));
  }
}

// Simple quadrilateral: convex-position points in hull order, or a dart when
// one point falls inside the other three's triangle.
inline Polygon random_simple_quad(std::mt19937_64& rng, bool want_dart) {
  for (;;) {
    const Polygon hull = random_convex_polygon(rng, 4);
    if (!want_dart && hull.size() == 4) return hull;
    if (want_dart && hull.size() == 3) {
      // insert the interior point between two hull vertices
      std::vector<Point2> pts{random_point(rng), random_point(rng),
                              random_point(rng), random_point(rng)};
      // brute force: try all orders, keep a simple non-convex one
      std::sort(pts.begin(), pts.end(), [](Point2 a, Point2 b) {
        return a.x < b.x || (a.x == b.x && a.y < b.y);
      });
      do {
        std::vector<Point2> v = pts;
        if (!steiner::is_simple(v)) continue;
        if (steiner::signed_area(v) < 0.05) continue;
        Polygon q(v);
        if (!steiner::is_convex(q)) return q;
      } while (std::next_permutation(
          pts.begin(), pts.end(), [](Point2 a, Point2 b) {
            return a.x < b.x || (a.x == b.x && a.y < b.y);
          }));
    }
  }
}

inline steiner::Line random_line(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
  const double a = angle(rng);
  return steiner::Line(random_point(rng), {std::cos(a), std::sin(a)});
}

inline steiner::Transform random_rigid_motion(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
  return steiner::Transform{angle(rng), random_point(rng)};
}

// Interior point by rejection sampling from the bounding box, at least
// `margin_frac` * diameter away from the boundary.
inline Point2 random_interior_point(std::mt19937_64& rng, const Polygon& P,
                                    double margin_frac = 0.02) {
  double lox = 1e300, hix = -1e300, loy = 1e300, hiy = -1e300;
  for (const auto& v : P.vertices()) {
    lox = std::min(lox, v.x);
    hix = std::max(hix, v.x);
    loy = std::min(loy, v.y);
    hiy = std::max(hiy, v.y);
  }
  std::uniform_real_distribution<double> ux(lox, hix), uy(loy, hiy);
  const double margin = margin_frac * steiner::diameter(P);
  for (;;) {
    const Point2 p{ux(rng), uy(rng)};
    if (steiner::contains(P, p, 0.0) &&
        steiner::boundary_distance(P, p) > margin)
      return p;
  }
}

// --------------------------------------------------------------------------
// independent oracles
// --------------------------------------------------------------------------

// P_x(tau_(-a,a) > t) by the method of images (absorbing barriers at 0 and
// L = 2a), an independent route from the eigenfunction series in the library.
inline double interval_survival_images(double a, double x, double t) {
  if (std::abs(x) >= a) return 0.0;
  const double L = 2.0 * a, y = x + a;
  auto Phi = [&](double z) {
    return 0.5 * (1.0 + std::erf(z / std::sqrt(2.0 * t)));
  };
  double s = 0.0;
  for (int k = -40; k <= 40; ++k) {
    s += (Phi(L - y - 2.0 * k * L) - Phi(-y - 2.0 * k * L)) -
         (Phi(L + y - 2.0 * k * L) - Phi(y - 2.0 * k * L));
  }
  return s;
}

// --------------------------------------------------------------------------
// two-sample Kolmogorov-Smirnov test
// --------------------------------------------------------------------------

inline double ks_statistic(std::vector<double> a, std::vector<double> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  double d = 0.0;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] <= b[j])
      ++i;
    else
      ++j;
    const double fa = static_cast<double>(i) / a.size();
    const double fb = static_cast<double>(j) / b.size();
    d = std::max(d, std::abs(fa - fb));
  }
  return d;
}

// Reject equality of distributions at the given level (default 0.01).
inline bool ks_reject(const std::vector<double>& a, const std::vector<double>& b,
                      double level = 0.01) {
  const double c = std::sqrt(-0.5 * std::log(level / 2.0));
  const double n = static_cast<double>(a.size());
  const double m = static_cast<double>(b.size());
  return ks_statistic(a, b) > c * std::sqrt((n + m) / (n * m));
}

}  // namespace testsupport
