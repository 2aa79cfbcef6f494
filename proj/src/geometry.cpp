#include "steiner/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace steiner {

double Point2::norm() const { return std::hypot(x, y); }

Point2 Point2::normalized() const {
  const double n = norm();
  if (n == 0.0) throw std::invalid_argument("cannot normalize zero vector");
  return {x / n, y / n};
}

Point2 Point2::rotated(double angle) const {
  const double c = std::cos(angle), s = std::sin(angle);
  return {c * x - s * y, s * x + c * y};
}

Line::Line(Point2 anchor, Vec2 direction) : anchor_(anchor), dir_(direction) {
  if (!std::isfinite(anchor.x) || !std::isfinite(anchor.y) ||
      !std::isfinite(direction.x) || !std::isfinite(direction.y))
    throw std::invalid_argument("line requires finite coordinates");
  if (std::abs(dir_.norm() - 1.0) > kGeomTol)
    throw std::invalid_argument("line direction must be unit length");
}

Line Line::through_points(Point2 a, Point2 b) {
  return Line(a, (b - a).normalized());
}

namespace {

double loop_scale(std::span<const Point2> loop) {
  double lo_x = std::numeric_limits<double>::infinity(), hi_x = -lo_x;
  double lo_y = lo_x, hi_y = -lo_x;
  for (const auto& p : loop) {
    lo_x = std::min(lo_x, p.x);
    hi_x = std::max(hi_x, p.x);
    lo_y = std::min(lo_y, p.y);
    hi_y = std::max(hi_y, p.y);
  }
  return std::max({hi_x - lo_x, hi_y - lo_y, 1e-300});
}

double orient(Point2 a, Point2 b, Point2 c) { return (b - a).cross(c - a); }

// Is p within distance `dist_tol` of segment [a, b]?
bool on_segment(Point2 a, Point2 b, Point2 p, double dist_tol) {
  const Vec2 ab = b - a;
  const double len = ab.norm();
  if (len == 0.0) return p.dist(a) <= dist_tol;
  if (std::abs(orient(a, b, p)) > dist_tol * len) return false;
  const double t = (p - a).dot(ab) / (len * len);
  const double t_tol = dist_tol / len;
  return t >= -t_tol && t <= 1.0 + t_tol;
}

// Segment intersection test. `shared` marks a vertex the two segments
// legitimately share (adjacent polygon edges); any other contact is a
// conflict.
bool segments_conflict(Point2 p1, Point2 p2, Point2 q1, Point2 q2,
                       std::optional<Point2> shared, double scale) {
  const double dist_tol = kGeomTol * scale;

  if (!shared) {
    const double atol =
        dist_tol * std::max((p2 - p1).norm(), (q2 - q1).norm());
    const double d1 = orient(q1, q2, p1), d2 = orient(q1, q2, p2);
    const double d3 = orient(p1, p2, q1), d4 = orient(p1, p2, q2);
    if (((d1 > atol && d2 < -atol) || (d1 < -atol && d2 > atol)) &&
        ((d3 > atol && d4 < -atol) || (d3 < -atol && d4 > atol)))
      return true;
    // touching counts as a conflict for non-adjacent edges
    return on_segment(q1, q2, p1, dist_tol) ||
           on_segment(q1, q2, p2, dist_tol) ||
           on_segment(p1, p2, q1, dist_tol) ||
           on_segment(p1, p2, q2, dist_tol);
  }

  // Adjacent edges meet at *shared*; reject collinear overlap or an endpoint
  // of one edge lying on the other.
  auto other = [&](Point2 a, Point2 b) {
    return (a.dist(*shared) < b.dist(*shared)) ? b : a;
  };
  const Point2 po = other(p1, p2), qo = other(q1, q2);
  return on_segment(q1, q2, po, dist_tol) || on_segment(p1, p2, qo, dist_tol);
}

}  // namespace

bool is_simple(std::span<const Point2> loop) {
  const std::size_t n = loop.size();
  if (n < 3) return false;
  const double scale = loop_scale(loop);
  for (std::size_t i = 0; i < n; ++i) {
    if (!std::isfinite(loop[i].x) || !std::isfinite(loop[i].y)) return false;
    if (loop[i].dist(loop[(i + 1) % n]) <= kGeomTol * scale) return false;
  }
  for (std::size_t i = 0; i < n; ++i) {
    const Point2 p1 = loop[i], p2 = loop[(i + 1) % n];
    for (std::size_t j = i + 1; j < n; ++j) {
      const Point2 q1 = loop[j], q2 = loop[(j + 1) % n];
      std::optional<Point2> shared;
      if ((i + 1) % n == j) shared = p2;
      if ((j + 1) % n == i) shared = p1;
      if (!shared && i == j) continue;
      if (segments_conflict(p1, p2, q1, q2, shared, scale)) return false;
    }
  }
  return true;
}

double signed_area(std::span<const Point2> loop) {
  double acc = 0.0;
  const std::size_t n = loop.size();
  for (std::size_t i = 0; i < n; ++i) acc += loop[i].cross(loop[(i + 1) % n]);
  return 0.5 * acc;
}

Polygon::Polygon(std::vector<Point2> vertices) : verts_(std::move(vertices)) {
  if (verts_.size() < 3)
    throw std::invalid_argument("polygon needs at least 3 vertices");
  if (!is_simple(verts_))
    throw std::invalid_argument("polygon boundary must be simple");
  if (signed_area(verts_) <= 0.0)
    throw std::invalid_argument("polygon must be counterclockwise");
}

double area(const Polygon& P) { return signed_area(P.vertices()); }

double perimeter(const Polygon& P) {
  double acc = 0.0;
  for (std::size_t i = 0; i < P.size(); ++i)
    acc += P.vertex(i).dist(P.vertex(i + 1));
  return acc;
}

double diameter(const Polygon& P) {
  double best = 0.0;
  for (std::size_t i = 0; i < P.size(); ++i)
    for (std::size_t j = i + 1; j < P.size(); ++j)
      best = std::max(best, P.vertex(i).dist(P.vertex(j)));
  return best;
}

Point2 centroid(const Polygon& P) {
  double ax = 0.0, ay = 0.0, a = 0.0;
  for (std::size_t i = 0; i < P.size(); ++i) {
    const Point2 p = P.vertex(i), q = P.vertex(i + 1);
    const double w = p.cross(q);
    ax += (p.x + q.x) * w;
    ay += (p.y + q.y) * w;
    a += w;
  }
  return {ax / (3.0 * a), ay / (3.0 * a)};
}

double min_interior_angle(const Polygon& P) {
  double best = std::numeric_limits<double>::infinity();
  const std::size_t n = P.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 in = P.vertex(i) - P.vertex(i + n - 1);
    const Vec2 out = P.vertex(i + 1) - P.vertex(i);
    const double turn = std::atan2(in.cross(out), in.dot(out));
    best = std::min(best, std::numbers::pi_v<double> - turn);
  }
  return best;
}

bool is_convex(const Polygon& P) {
  const std::size_t n = P.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 a = P.vertex(i + 1) - P.vertex(i);
    const Vec2 b = P.vertex(i + 2) - P.vertex(i + 1);
    if (a.cross(b) < -kGeomTol * a.norm() * b.norm()) return false;
  }
  return true;
}

namespace {

double point_segment_distance(Point2 p, Point2 a, Point2 b) {
  const Vec2 ab = b - a;
  const double len2 = ab.norm_sq();
  if (len2 == 0.0) return p.dist(a);
  const double t = std::clamp((p - a).dot(ab) / len2, 0.0, 1.0);
  return p.dist(a + ab * t);
}

bool point_in_loop(std::span<const Point2> loop, Point2 p) {
  // even-odd crossing rule
  bool inside = false;
  const std::size_t n = loop.size();
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    const Point2 a = loop[j], b = loop[i];
    if ((b.y > p.y) != (a.y > p.y)) {
      const double x_cross = b.x + (p.y - b.y) * (a.x - b.x) / (a.y - b.y);
      if (p.x < x_cross) inside = !inside;
    }
  }
  return inside;
}

}  // namespace

double distance_to_polygon(Point2 p, const Polygon& P) {
  if (point_in_loop(P.vertices(), p)) return 0.0;
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < P.size(); ++i)
    best = std::min(best, point_segment_distance(p, P.vertex(i), P.vertex(i + 1)));
  return best;
}

double boundary_distance(const Polygon& P, Point2 p) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < P.size(); ++i)
    best = std::min(best, point_segment_distance(p, P.vertex(i), P.vertex(i + 1)));
  return best;
}

bool contains(const Polygon& P, Point2 p, double tol) {
  if (point_in_loop(P.vertices(), p)) return true;
  for (std::size_t i = 0; i < P.size(); ++i)
    if (point_segment_distance(p, P.vertex(i), P.vertex(i + 1)) <= tol)
      return true;
  return false;
}

double epsilon_cone_radius(const Polygon& P) {
  if (!is_convex(P))
    throw unsupported_input("epsilon_cone_radius requires a convex polygon");
  const double angle = min_interior_angle(P);
  double dist = std::numeric_limits<double>::infinity();
  const std::size_t n = P.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t e = 0; e < n; ++e) {
      if (e == i || (e + 1) % n == i) continue;  // incident edges
      dist = std::min(dist, point_segment_distance(P.vertex(i), P.vertex(e),
                                                   P.vertex(e + 1)));
    }
  }
  return 0.25 * std::min(angle, dist);
}

Point2 project_point(Point2 p, const Line& line) {
  return line.anchor() + line.direction() * line.coord_along(p);
}

Transform to_canonical(const Line& line) {
  const double phi = std::atan2(line.direction().y, line.direction().x);
  const double theta = std::numbers::pi_v<double> / 2.0 - phi;
  return Transform{theta, -line.anchor().rotated(theta)};
}

Polygon transformed(const Polygon& P, const Transform& T) {
  std::vector<Point2> out;
  out.reserve(P.size());
  for (const auto& v : P.vertices()) out.push_back(T.apply(v));
  return Polygon(std::move(out));
}

Line transformed(const Line& line, const Transform& T) {
  return Line(T.apply(line.anchor()), line.direction().rotated(T.angle));
}

Polygon reflect(const Polygon& P, const Line& line) {
  std::vector<Point2> out;
  out.reserve(P.size());
  for (const auto& v : P.vertices())
    out.push_back(project_point(v, line) * 2.0 - v);
  std::reverse(out.begin(), out.end());
  return Polygon(std::move(out));
}

double PiecewiseLinear::operator()(double z) const {
  if (knots.empty() || z < knots.front().z || z > knots.back().z) return 0.0;
  auto it = std::lower_bound(
      knots.begin(), knots.end(), z,
      [](const Knot& k, double val) { return k.z < val; });
  if (it->z == z) return it->value;
  const auto hi = it;
  const auto lo = it - 1;
  const double w = (z - lo->z) / (hi->z - lo->z);
  return lo->value + w * (hi->value - lo->value);
}

double PiecewiseLinear::integral() const {
  double acc = 0.0;
  for (std::size_t i = 0; i + 1 < knots.size(); ++i)
    acc += 0.5 * (knots[i].value + knots[i + 1].value) *
           (knots[i + 1].z - knots[i].z);
  return acc;
}

// ---------------------------------------------------------------------------
// Slab sweep
// ---------------------------------------------------------------------------

namespace {

struct Slab {
  double z_lo, z_hi;
  double len_lo, len_hi;  // one-sided total chord lengths at the slab ends
};

// Decompose a polygon (already in the canonical frame: line = y-axis, slice
// coordinate z = y, chords horizontal) into slabs between consecutive vertex
// levels, with the total chord length linear inside each slab.
std::vector<Slab> chord_slabs(const std::vector<Point2>& v) {
  std::vector<double> zs;
  zs.reserve(v.size());
  for (const auto& p : v) zs.push_back(p.y);
  std::sort(zs.begin(), zs.end());
  const double z_eps = kGeomTol * std::max(zs.back() - zs.front(), 1e-300);
  std::vector<double> levels;
  for (double z : zs)
    if (levels.empty() || z - levels.back() > z_eps) levels.push_back(z);
  if (levels.size() < 2)
    throw degenerate_polygon("polygon has no extent along the sweep line");

  std::vector<Slab> slabs;
  const std::size_t n = v.size();
  for (std::size_t s = 0; s + 1 < levels.size(); ++s) {
    const double z_lo = levels[s], z_hi = levels[s + 1];
    const double zm = 0.5 * (z_lo + z_hi);

    // edges strictly crossing the slab, with x linear in z
    struct Crossing {
      double x_mid, x_lo, x_hi;
    };
    std::vector<Crossing> cr;
    for (std::size_t i = 0; i < n; ++i) {
      const Point2 p = v[i], q = v[(i + 1) % n];
      if ((p.y < zm) == (q.y < zm)) continue;
      const double inv = 1.0 / (q.y - p.y);
      auto x_at = [&](double z) { return p.x + (z - p.y) * (q.x - p.x) * inv; };
      cr.push_back({x_at(zm), x_at(z_lo), x_at(z_hi)});
    }
    std::sort(cr.begin(), cr.end(),
              [](const Crossing& a, const Crossing& b) { return a.x_mid < b.x_mid; });

    double len_lo = 0.0, len_hi = 0.0;
    for (std::size_t k = 0; k + 1 < cr.size(); k += 2) {
      len_lo += std::max(0.0, cr[k + 1].x_lo - cr[k].x_lo);
      len_hi += std::max(0.0, cr[k + 1].x_hi - cr[k].x_hi);
    }
    slabs.push_back({z_lo, z_hi, len_lo, len_hi});
  }
  return slabs;
}

}  // namespace

PiecewiseLinear chord_length_function(const Polygon& P, const Line& line) {
  const Polygon C = transformed(P, to_canonical(line));
  const auto slabs = chord_slabs(C.vertices());
  PiecewiseLinear f;
  f.knots.reserve(slabs.size() + 1);
  f.knots.push_back({slabs.front().z_lo, slabs.front().len_lo});
  for (std::size_t i = 0; i < slabs.size(); ++i) {
    double value = slabs[i].len_hi;
    if (i + 1 < slabs.size()) value = 0.5 * (slabs[i].len_hi + slabs[i + 1].len_lo);
    f.knots.push_back({slabs[i].z_hi, value});
  }
  return f;
}

Polygon steiner_symmetrize(const Polygon& P, const Line& line) {
  const Transform T = to_canonical(line);
  const Polygon C = transformed(P, T);
  const auto slabs = chord_slabs(C.vertices());
  const double scale = loop_scale(C.vertices());
  const double merge = kGeomTol * scale;

  // Right boundary of the symmetrized region, bottom to top. Jumps between
  // adjacent slabs become horizontal steps.
  std::vector<Point2> right;
  auto push = [&](double w, double z) {
    const Point2 p{0.5 * w, z};
    if (right.empty() || right.back().dist(p) > merge) right.push_back(p);
  };
  push(slabs.front().len_lo, slabs.front().z_lo);
  for (std::size_t i = 0; i < slabs.size(); ++i) {
    if (i > 0 && std::abs(slabs[i].len_lo - slabs[i - 1].len_hi) > merge)
      push(slabs[i].len_lo, slabs[i].z_lo);
    push(slabs[i].len_hi, slabs[i].z_hi);
  }

  std::vector<Point2> loop = right;
  for (auto it = right.rbegin(); it != right.rend(); ++it) {
    const Point2 p{-it->x, it->y};
    if (loop.back().dist(p) > merge &&
        (loop.size() < 2 || loop.front().dist(p) > merge))
      loop.push_back(p);
  }

  // drop collinear interior vertices
  for (bool changed = true; changed && loop.size() > 3;) {
    changed = false;
    for (std::size_t i = 0; i < loop.size() && loop.size() > 3; ++i) {
      const Point2 a = loop[(i + loop.size() - 1) % loop.size()];
      const Point2 b = loop[i];
      const Point2 c = loop[(i + 1) % loop.size()];
      if (std::abs(orient(a, b, c)) <= kGeomTol * scale * scale &&
          (b - a).dot(c - b) > 0.0) {
        loop.erase(loop.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        --i;
      }
    }
  }

  if (loop.size() < 3 || signed_area(loop) <= kGeomTol * scale * scale)
    throw degenerate_polygon("symmetrization produced a degenerate polygon");

  return transformed(Polygon(std::move(loop)), T.inverse());
}

// ---------------------------------------------------------------------------
// Hausdorff distance
// ---------------------------------------------------------------------------

namespace {

double directed_vertex_sup(const Polygon& A, const Polygon& B) {
  double best = 0.0;
  for (const auto& v : A.vertices())
    best = std::max(best, distance_to_polygon(v, B));
  return best;
}

double directed_sampled_sup(const Polygon& A, const Polygon& B, double step) {
  double best = 0.0;
  for (std::size_t i = 0; i < A.size(); ++i) {
    const Point2 a = A.vertex(i), b = A.vertex(i + 1);
    const double len = a.dist(b);
    const int k = std::max(1, static_cast<int>(std::ceil(len / step)));
    for (int j = 0; j <= k; ++j) {
      const Point2 p = a + (b - a) * (static_cast<double>(j) / k);
      best = std::max(best, distance_to_polygon(p, B));
    }
  }
  return best;
}

}  // namespace

double hausdorff_distance(const Polygon& A, const Polygon& B,
                          double sampling_step) {
  if (is_convex(A) && is_convex(B))
    return std::max(directed_vertex_sup(A, B), directed_vertex_sup(B, A));
  if (sampling_step <= 0.0)
    sampling_step = std::max(diameter(A), diameter(B)) / 2048.0;
  return std::max(directed_sampled_sup(A, B, sampling_step),
                  directed_sampled_sup(B, A, sampling_step));
}

}  // namespace steiner
