#include "steiner/schedules.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace steiner {

namespace {

constexpr double kPi = std::numbers::pi_v<double>;
constexpr double kClassifyTol = 1e-9;  // relative, shape classification

Vec2 rot90(Vec2 v) { return {-v.y, v.x}; }

}  // namespace

Polygon RectParams::polygon() const {
  return Polygon({{a, b}, {-a, b}, {-a, -b}, {a, -b}});
}

Line triangle_mediator(const Polygon& T, int side_index) {
  if (T.size() != 3)
    throw unsupported_input("mediator requires a triangle");
  const Point2 a = T.vertex(static_cast<std::size_t>(side_index));
  const Point2 b = T.vertex(static_cast<std::size_t>(side_index) + 1);
  const Point2 mid = (a + b) * 0.5;
  return Line(mid, rot90((b - a).normalized()));
}

ScheduleState triangle_step(const ScheduleState& state, int side_index) {
  const Polygon& T = state.polygon;
  if (T.size() != 3)
    throw unsupported_input("triangle_step requires a triangle");
  if (side_index < 0 || side_index > 2)
    throw std::invalid_argument("side_index must be 0, 1, or 2");

  const Line med = triangle_mediator(T, side_index);
  const Polygon sym = steiner_symmetrize(T, med);
  if (sym.size() != 3)
    throw degenerate_polygon("mediator symmetrization left a non-triangle");

  // Reindex the symmetrized triangle so the surviving base keeps its vertex
  // positions and the apex lands at side_index + 2.
  const std::size_t i = static_cast<std::size_t>(side_index);
  const Point2 base_a = T.vertex(i), base_b = T.vertex(i + 1);
  const double apex_z = med.coord_along(T.vertex(i + 2));
  const Point2 apex = med.anchor() + med.direction() * apex_z;

  std::array<Point2, 3> target{};
  target[i % 3] = base_a;
  target[(i + 1) % 3] = base_b;
  target[(i + 2) % 3] = apex;

  const double tol = 1e-7 * diameter(T);
  std::array<Point2, 3> out{};
  for (int k = 0; k < 3; ++k) {
    const Point2 want = target[static_cast<std::size_t>(k)];
    double best = std::numeric_limits<double>::infinity();
    Point2 pick{};
    for (const auto& v : sym.vertices()) {
      const double d = v.dist(want);
      if (d < best) {
        best = d;
        pick = v;
      }
    }
    if (best > tol)
      throw degenerate_polygon("mediator symmetrization drifted from the "
                               "isoceles prediction");
    out[static_cast<std::size_t>(k)] = pick;
  }

  return ScheduleState{state.step + 1,
                       Polygon({out[0], out[1], out[2]}),
                       project_point(state.tracked, med), med};
}

std::vector<ScheduleState> triangle_schedule(const Polygon& T, Point2 x0,
                                             int n_steps) {
  if (T.size() != 3)
    throw unsupported_input("triangle_schedule requires a triangle");
  if (!contains(T, x0, 1e-9 * diameter(T)))
    throw std::invalid_argument("x0 must lie in the triangle");
  if (n_steps < 0) throw std::invalid_argument("n_steps must be >= 0");

  std::vector<ScheduleState> states;
  states.reserve(static_cast<std::size_t>(n_steps) + 1);
  states.push_back({0, T, x0, std::nullopt});
  for (int k = 0; k < n_steps; ++k)
    states.push_back(triangle_step(states.back(), k % 3));
  return states;
}

std::vector<Point2> equilateral_projection_schedule(Point2 x0, int n_steps) {
  if (n_steps < 0) throw std::invalid_argument("n_steps must be >= 0");
  const Polygon ref = regular_polygon(3, 3.0 * std::sqrt(3.0) / 4.0);
  if (!contains(ref, x0, 1e-9))
    throw std::invalid_argument(
        "x0 must lie in the reference equilateral triangle (circumradius 1)");

  const std::array<Vec2, 3> dirs = {
      Vec2{1.0, 0.0},
      Vec2{std::cos(2.0 * kPi / 3.0), std::sin(2.0 * kPi / 3.0)},
      Vec2{std::cos(4.0 * kPi / 3.0), std::sin(4.0 * kPi / 3.0)}};

  std::vector<Point2> out;
  out.reserve(static_cast<std::size_t>(n_steps) + 1);
  Point2 p = dirs[0] * x0.dot(dirs[0]);
  out.push_back(p);
  for (int m = 1; m <= n_steps; ++m) {
    const Vec2 d = dirs[static_cast<std::size_t>(m % 3)];
    p = d * p.dot(d);
    out.push_back(p);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Quadrilateral reduction
// ---------------------------------------------------------------------------

namespace {

bool is_rectangle_quad(const Polygon& Q) {
  for (int i = 0; i < 4; ++i) {
    const Vec2 e1 = Q.vertex(static_cast<std::size_t>(i) + 1) -
                    Q.vertex(static_cast<std::size_t>(i));
    const Vec2 e2 = Q.vertex(static_cast<std::size_t>(i) + 2) -
                    Q.vertex(static_cast<std::size_t>(i) + 1);
    if (std::abs(e1.dot(e2)) > kClassifyTol * e1.norm() * e2.norm())
      return false;
  }
  return true;
}

bool is_parallelogram_quad(const Polygon& Q) {
  const Vec2 a = Q.vertex(1) - Q.vertex(0), b = Q.vertex(3) - Q.vertex(2);
  const Vec2 c = Q.vertex(2) - Q.vertex(1), d = Q.vertex(0) - Q.vertex(3);
  return std::abs(a.cross(b)) <= kClassifyTol * a.norm() * b.norm() &&
         std::abs(c.cross(d)) <= kClassifyTol * c.norm() * d.norm();
}

// Returns the indices of the two vertices where congruent side pairs meet,
// or nullopt if the quadrilateral is not a kite.
std::optional<std::pair<int, int>> kite_axis(const Polygon& Q) {
  std::array<double, 4> s{};
  double smax = 0.0;
  for (int i = 0; i < 4; ++i) {
    s[static_cast<std::size_t>(i)] =
        Q.vertex(static_cast<std::size_t>(i))
            .dist(Q.vertex(static_cast<std::size_t>(i) + 1));
    smax = std::max(smax, s[static_cast<std::size_t>(i)]);
  }
  const double tol = kClassifyTol * smax;
  if (std::abs(s[0] - s[1]) <= tol && std::abs(s[2] - s[3]) <= tol)
    return std::make_pair(1, 3);
  if (std::abs(s[1] - s[2]) <= tol && std::abs(s[3] - s[0]) <= tol)
    return std::make_pair(2, 0);
  return std::nullopt;
}

bool lex_less(Point2 a, Point2 b) {
  return a.x < b.x || (a.x == b.x && a.y < b.y);
}

// Perpendicular bisector of the longer diagonal; ties broken by the
// lexicographically smallest endpoint pair.
Line longer_diagonal_bisector(const Polygon& Q) {
  const Point2 a0 = Q.vertex(0), a1 = Q.vertex(2);
  const Point2 b0 = Q.vertex(1), b1 = Q.vertex(3);
  const double la = a0.dist(a1), lb = b0.dist(b1);
  bool pick_a = la > lb;
  if (std::abs(la - lb) <= kClassifyTol * std::max(la, lb)) {
    const Point2 amin = lex_less(a0, a1) ? a0 : a1;
    const Point2 bmin = lex_less(b0, b1) ? b0 : b1;
    pick_a = lex_less(amin, bmin);
  }
  const Point2 p = pick_a ? a0 : b0;
  const Point2 q = pick_a ? a1 : b1;
  return Line((p + q) * 0.5, rot90((q - p).normalized()));
}

}  // namespace

std::vector<ScheduleState> quad_to_rectangle(const Polygon& Q, Point2 x0) {
  if (Q.size() != 4)
    throw unsupported_input("quad_to_rectangle requires a quadrilateral");
  if (!contains(Q, x0, 1e-9 * diameter(Q)))
    throw std::invalid_argument("x0 must lie in the quadrilateral");

  std::vector<ScheduleState> states;
  states.push_back({0, Q, x0, std::nullopt});

  for (int iter = 0; iter < 3; ++iter) {
    const Polygon& cur = states.back().polygon;
    if (cur.size() != 4)
      throw degenerate_polygon("quadrilateral degenerated during reduction");
    if (is_rectangle_quad(cur)) break;

    Line line = [&] {
      if (is_parallelogram_quad(cur)) {
        const Vec2 side = cur.vertex(1) - cur.vertex(0);
        return Line(centroid(cur), rot90(side.normalized()));
      }
      if (const auto axis = kite_axis(cur)) {
        const Point2 p = cur.vertex(static_cast<std::size_t>(axis->first));
        const Point2 q = cur.vertex(static_cast<std::size_t>(axis->second));
        return Line((p + q) * 0.5, rot90((q - p).normalized()));
      }
      return longer_diagonal_bisector(cur);
    }();

    states.push_back({states.back().step + 1, steiner_symmetrize(cur, line),
                      project_point(states.back().tracked, line), line});
  }

  if (!is_rectangle_quad(states.back().polygon))
    throw degenerate_polygon(
        "quadrilateral did not reach a rectangle in 3 symmetrizations");
  return states;
}

// ---------------------------------------------------------------------------
// Rectangle squaring
// ---------------------------------------------------------------------------

std::array<Point2, 4> rhombus_vertices(const RectParams& r) {
  const double a = r.a, b = r.b;
  const double d = a * a + b * b;
  return {Point2{a, b}, Point2{-2.0 * a * b * b / d, 2.0 * a * a * b / d},
          Point2{-a, -b}, Point2{2.0 * a * b * b / d, -2.0 * a * a * b / d}};
}

std::pair<double, double> next_rect_sides(const RectParams& r) {
  const double a = r.a, b = r.b;
  const double num = a * a * a * a + 6.0 * a * a * b * b + b * b * b * b;
  const double den = a * a + b * b;
  const double a_next = std::sqrt(num / den);
  const double b_next = 4.0 * a * b * std::sqrt(den / num);
  return {a_next, b_next};
}

double side_ratio_step(double c) {
  if (!(c > 0.0) || !std::isfinite(c))
    throw std::invalid_argument("side ratio must be positive");
  const double c2 = c * c;
  return (4.0 * c * c2 + 4.0 * c) / (c2 * c2 + 6.0 * c2 + 1.0);
}

namespace {

// Half-extents of an axis-aligned origin-centered rectangle state.
RectParams read_rect(const Polygon& P) {
  double a = 0.0, b = 0.0;
  for (const auto& v : P.vertices()) {
    a = std::max(a, std::abs(v.x));
    b = std::max(b, std::abs(v.y));
  }
  const double tol = 1e-6 * std::max(a, b);
  for (const auto& v : P.vertices())
    if (std::abs(std::abs(v.x) - a) > tol || std::abs(std::abs(v.y) - b) > tol)
      throw std::invalid_argument(
          "schedule state is not an axis-aligned centered rectangle");
  return RectParams(a, b);
}

}  // namespace

std::vector<ScheduleState> rect_to_square_schedule(const RectParams& r,
                                                   int n_stages) {
  if (n_stages < 0) throw std::invalid_argument("n_stages must be >= 0");
  const Point2 origin{0.0, 0.0};

  std::vector<ScheduleState> states;
  states.reserve(2 * static_cast<std::size_t>(n_stages) + 1);
  states.push_back({0, r.polygon(), origin, std::nullopt});

  for (int stage = 0; stage < n_stages; ++stage) {
    const RectParams cur = read_rect(states.back().polygon);
    const double a = cur.a, b = cur.b;

    const Line l1(origin, Vec2{b, -a}.normalized());
    Polygon rhombus = steiner_symmetrize(states.back().polygon, l1);
    states.push_back({states.back().step + 1, std::move(rhombus), origin, l1});

    // Perpendicular to the rhombus side pair; written in implicit form so the
    // square case (b = a) degenerates cleanly to the vertical axis.
    const Line l2(origin,
                  Vec2{b * b * b - a * a * b,
                       -(a * a * a + 3.0 * a * b * b)}.normalized());
    Polygon rect = steiner_symmetrize(states.back().polygon, l2);

    // Re-emit the rectangle axis-aligned: its sides run along and across l2,
    // and the slice direction (perpendicular to l2) carries side a'.
    const Vec2 slice_dir = rot90(l2.direction());
    const double phi = std::atan2(slice_dir.y, slice_dir.x);
    rect = transformed(rect, Transform{-phi, {0.0, 0.0}});
    states.push_back({states.back().step + 1, std::move(rect), origin, l2});
  }
  return states;
}

Polygon regular_polygon(int n, double area) {
  if (n != 3 && n != 4)
    throw unsupported_input("regular_polygon supports n = 3 and n = 4 only");
  if (!(area > 0.0)) throw std::invalid_argument("area must be positive");
  const double nn = n;
  const double radius = std::sqrt(2.0 * area / (nn * std::sin(2.0 * kPi / nn)));
  std::vector<Point2> verts;
  verts.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    const double phi = 2.0 * kPi * k / nn;
    verts.push_back({radius * std::cos(phi), radius * std::sin(phi)});
  }
  return Polygon(std::move(verts));
}

Polygon align_pose(const Polygon& target, const Polygon& reference,
                   double symmetry_sector) {
  if (!(symmetry_sector > 0.0))
    throw std::invalid_argument("symmetry sector must be positive");
  const Point2 c_ref = centroid(reference);
  const Point2 c_tgt = centroid(target);

  auto posed = [&](double angle) {
    std::vector<Point2> verts;
    verts.reserve(target.size());
    for (const auto& v : target.vertices())
      verts.push_back((v - c_tgt).rotated(angle) + c_ref);
    return Polygon(std::move(verts));
  };
  auto cost = [&](double angle) {
    return hausdorff_distance(posed(angle), reference);
  };

  const int coarse = 96;
  double best_angle = 0.0, best = cost(0.0);
  for (int k = 1; k < coarse; ++k) {
    const double angle = symmetry_sector * k / coarse;
    const double c = cost(angle);
    if (c < best) {
      best = c;
      best_angle = angle;
    }
  }

  // golden-section refinement around the best coarse sample
  double lo = best_angle - symmetry_sector / coarse;
  double hi = best_angle + symmetry_sector / coarse;
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
  double f1 = cost(x1), f2 = cost(x2);
  for (int it = 0; it < 60; ++it) {
    if (f1 < f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - gr * (hi - lo);
      f1 = cost(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + gr * (hi - lo);
      f2 = cost(x2);
    }
  }
  return posed(0.5 * (lo + hi));
}

}  // namespace steiner
