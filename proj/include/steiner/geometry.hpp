#pragma once
/**
 * Planar polygon geometry: Steiner symmetrization about an arbitrary line,
 * orthogonal projection, chord-length (slice measure) functions, Hausdorff
 * distance, and shape diagnostics.
 *
 * Conventions:
 * - Polygons are closed counterclockwise vertex loops; all computations use
 *   closures (the open/closed distinction is invisible to every consumer).
 * - Geometric predicates use absolute tolerance ~1e-12 on coordinates at
 *   unit scale; tolerances scale with the polygon diameter where noted.
 * - All operations are pure functions on immutable values and are safe to
 *   call concurrently.
 */

#include <array>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace steiner {

inline constexpr double kGeomTol = 1e-12;

/// Input violates an operation's documented precondition (e.g. a non-convex
/// polygon passed to a convex-only routine).
struct unsupported_input : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A construction produced (or would produce) a polygon with no area.
struct degenerate_polygon : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  Point2() = default;
  Point2(double x_, double y_) : x(x_), y(y_) {}

  Point2 operator+(Point2 o) const { return {x + o.x, y + o.y}; }
  Point2 operator-(Point2 o) const { return {x - o.x, y - o.y}; }
  Point2 operator*(double s) const { return {x * s, y * s}; }
  Point2 operator-() const { return {-x, -y}; }

  double dot(Point2 o) const { return x * o.x + y * o.y; }
  /// z-component of the 3-D cross product (positive = `o` is CCW from *this).
  double cross(Point2 o) const { return x * o.y - y * o.x; }
  double norm() const;
  double norm_sq() const { return x * x + y * y; }
  double dist(Point2 o) const { return (*this - o).norm(); }
  Point2 normalized() const;
  /// Rotation by `angle` radians about the origin.
  Point2 rotated(double angle) const;
};

using Vec2 = Point2;

inline Point2 operator*(double s, Point2 p) { return p * s; }

/// Rigid motion p -> R(angle) * p + translation.
struct Transform {
  double angle = 0.0;
  Vec2 translation{0.0, 0.0};

  Point2 apply(Point2 p) const { return p.rotated(angle) + translation; }
  Transform inverse() const {
    return Transform{-angle, (-translation).rotated(-angle)};
  }
};

/// Oriented line given by an anchor point and a unit direction.
class Line {
 public:
  /// `direction` must be unit length within 1e-12.
  Line(Point2 anchor, Vec2 direction);

  /// Line through two distinct points, direction normalized from a to b.
  static Line through_points(Point2 a, Point2 b);

  Point2 anchor() const { return anchor_; }
  Vec2 direction() const { return dir_; }

  /// Coordinate of p along the line (signed distance from anchor).
  double coord_along(Point2 p) const { return (p - anchor_).dot(dir_); }
  /// Signed perpendicular offset of p (positive on the left of direction).
  double offset(Point2 p) const { return dir_.cross(p - anchor_); }

 private:
  Point2 anchor_;
  Vec2 dir_;
};

/// Simple counterclockwise polygon with at least 3 vertices.
/// The constructor validates: finite coordinates, no two consecutive
/// vertices equal, positive signed area, no self-intersection.
class Polygon {
 public:
  explicit Polygon(std::vector<Point2> vertices);

  const std::vector<Point2>& vertices() const { return verts_; }
  std::size_t size() const { return verts_.size(); }
  Point2 vertex(std::size_t i) const { return verts_[i % verts_.size()]; }

 private:
  std::vector<Point2> verts_;
};

/// Continuous piecewise-linear function given by knots with strictly
/// increasing abscissae; zero outside the knot range.
struct PiecewiseLinear {
  struct Knot {
    double z;
    double value;
  };
  std::vector<Knot> knots;

  double operator()(double z) const;
  double integral() const;
  double z_min() const { return knots.front().z; }
  double z_max() const { return knots.back().z; }
};

// ---------------------------------------------------------------------------
// Core operations
// ---------------------------------------------------------------------------

/// Foot of the perpendicular from p to the line.
Point2 project_point(Point2 p, const Line& line);

/// Rigid motion mapping `line` onto the canonical vertical axis {x = 0},
/// with line.direction() mapped to (0, 1). Points on the line map to
/// first-coordinate-0 points.
Transform to_canonical(const Line& line);

/// Total slice measure z -> L^1(P(z)), where z is the coordinate along
/// `line` and slices run perpendicular to it. Knot values are one-sided
/// slice-measure limits taken from inside the polygon; the extreme knots
/// carry the length of any slice-parallel boundary edge there (0 when the
/// polygon tapers to a point). The integral equals area(P).
PiecewiseLinear chord_length_function(const Polygon& P, const Line& line);

/// Steiner symmetrization of P about `line`: every slice perpendicular to
/// the line is replaced by the interval of the same total measure centered
/// on the line. Preserves area; preserves convexity; never increases the
/// diameter. Throws degenerate_polygon if the result has no area.
Polygon steiner_symmetrize(const Polygon& P, const Line& line);

/// Mirror image across the line (an involution). Output is CCW.
Polygon reflect(const Polygon& P, const Line& line);

/// Hausdorff distance between the closed regions bounded by A and B.
/// Exact when both polygons are convex (the sup of the convex function
/// d(., region) over a polygon is attained at a vertex). Otherwise the
/// boundaries are sampled at `sampling_step` (default diameter/2048), which
/// underestimates boundary-attained suprema by at most one step.
double hausdorff_distance(const Polygon& A, const Polygon& B,
                          double sampling_step = 0.0);

double area(const Polygon& P);
/// Signed area of a raw loop (positive = CCW).
double signed_area(std::span<const Point2> loop);
double perimeter(const Polygon& P);
/// Max distance between two points of the region (= max over vertex pairs).
double diameter(const Polygon& P);
Point2 centroid(const Polygon& P);
double min_interior_angle(const Polygon& P);
bool is_convex(const Polygon& P);
/// True iff the loop is a valid simple polygon boundary: >= 3 vertices, no
/// repeated consecutive vertices, non-adjacent edges disjoint, adjacent
/// edges meeting only at the shared vertex.
bool is_simple(std::span<const Point2> loop);

/// Interior-cone radius bound for a convex polygon:
/// (1/4) * min(min interior angle, min vertex-to-opposite-side distance).
/// Throws unsupported_input for non-convex input.
double epsilon_cone_radius(const Polygon& P);

/// Closed-region membership with absolute tolerance `tol` (points within
/// `tol` of the boundary count as inside).
bool contains(const Polygon& P, Point2 p, double tol = kGeomTol);

Polygon transformed(const Polygon& P, const Transform& T);
Line transformed(const Line& line, const Transform& T);

/// Distance from a point to the closed region bounded by P (0 if inside).
double distance_to_polygon(Point2 p, const Polygon& P);

/// Distance from a point to the polygon's boundary curve.
double boundary_distance(const Polygon& P, Point2 p);

}  // namespace steiner
