#pragma once
/**
 * Symmetrization schedules for triangles, quadrilaterals, and rectangles:
 * mediator cycling that drives any triangle to the equilateral one,
 * the 3-step quadrilateral-to-rectangle reduction, and the alternating
 * rhombus/rectangle squaring of a rectangle, with tracked projection points
 * and the closed-form stage recurrences.
 *
 * All schedules are deterministic given their inputs and preserve area along
 * the way; every state's tracked point lies in its polygon.
 */

#include <array>
#include <cmath>
#include <optional>
#include <utility>
#include <vector>

#include "steiner/geometry.hpp"

namespace steiner {

struct ScheduleState {
  int step = 0;
  Polygon polygon;
  Point2 tracked;
  std::optional<Line> last_line;  // line used to produce this state
};

/// Axis-aligned rectangle centered at the origin with vertices (+-a, +-b).
struct RectParams {
  double a;  // half-width
  double b;  // half-height
  RectParams(double a_, double b_) : a(a_), b(b_) {
    if (!(a > 0.0) || !(b > 0.0) || !std::isfinite(a) || !std::isfinite(b))
      throw std::invalid_argument("rectangle half-extents must be positive");
  }
  Polygon polygon() const;
};

/// Perpendicular bisector of side (v_i, v_{i+1}) of a triangle.
Line triangle_mediator(const Polygon& T, int side_index);

/// One mediator symmetrization of a triangle. The chosen side survives
/// unchanged (it is already centered on its own mediator) and keeps its
/// vertex positions in the output; the remaining vertex moves onto the
/// mediator. The tracked point is replaced by its orthogonal projection
/// onto the mediator.
ScheduleState triangle_step(const ScheduleState& state, int side_index);

/// Mediator symmetrizations cycling the side index 0,1,2,0,1,2,... Returns
/// n_steps + 1 states, the input first. Along the sequence the minimum
/// interior angle never decreases and the triangles converge to the
/// equilateral one of equal area.
std::vector<ScheduleState> triangle_schedule(const Polygon& T, Point2 x0,
                                             int n_steps);

/// Projection dynamics on the fixed equilateral triangle (circumradius 1,
/// centered at the origin, first vertex on the positive x-axis): the point
/// is projected onto the center-to-vertex lines l_1, l_2, l_3 cyclically.
/// Returns n_steps + 1 points; entry 0 is the projection of x0 onto l_1,
/// and |out[m]| = |out[0]| / 2^m exactly (consecutive lines meet at 60
/// degrees, and sin(pi/6) = 1/2).
std::vector<Point2> equilateral_projection_schedule(Point2 x0, int n_steps);

/// Reduce a simple quadrilateral to a rectangle in at most 3 Steiner
/// symmetrizations: general -> kite (perpendicular bisector of the longer
/// diagonal), kite -> parallelogram (line perpendicular to the segment
/// joining the vertices where the congruent sides meet, through its
/// midpoint), parallelogram -> rectangle (line perpendicular to a parallel
/// side pair). Classification runs with relative tolerance 1e-9 and stops
/// early when the current shape already matches a later case. Returns all
/// states, input first; the final polygon is a rectangle.
std::vector<ScheduleState> quad_to_rectangle(const Polygon& Q, Point2 x0);

/// Vertices of the rhombus produced by symmetrizing the (+-a, +-b)
/// rectangle about the line through the origin perpendicular to its
/// (a,b)-(-a,-b) diagonal:
/// (a,b), (-2ab^2/(a^2+b^2), 2a^2b/(a^2+b^2)), (-a,-b), and the reflection.
std::array<Point2, 4> rhombus_vertices(const RectParams& r);

/// Full side lengths (a', b') of the rectangle obtained from that rhombus by
/// one more symmetrization; a' * b' = 4ab (the area).
std::pair<double, double> next_rect_sides(const RectParams& r);

/// One step of the side-ratio recurrence c -> (4c^3 + 4c)/(c^4 + 6c^2 + 1);
/// fixed point 1, and f(c) < 1 for every positive c != 1.
double side_ratio_step(double c);

/// Alternating rhombus/rectangle squaring schedule started from the
/// (+-a, +-b) rectangle. Each stage symmetrizes about l1 = {y = -(a/b) x}
/// (giving the rhombus) and then about the line through the origin
/// perpendicular to the rhombus's side pair (giving the next rectangle,
/// which is re-emitted in its axis-aligned pose so each stage matches the
/// closed forms rhombus_vertices / next_rect_sides in the rectangle's own
/// frame). The tracked point is the origin and stays fixed: every
/// symmetrization line passes through it. Returns 2 * n_stages + 1 states.
std::vector<ScheduleState> rect_to_square_schedule(const RectParams& r,
                                                   int n_stages);

/// Regular n-gon (n = 3 or 4) of the given area, centered at the origin,
/// first vertex on the positive x-axis.
Polygon regular_polygon(int n, double area);

/// Rotate `target` about its centroid (after translating its centroid onto
/// `reference`'s) to minimize the Hausdorff distance to `reference`,
/// searching rotations in [0, symmetry_sector). Used to compare schedule
/// limits against a regular polygon whose pose the schedule does not pin
/// down.
Polygon align_pose(const Polygon& target, const Polygon& reference,
                   double symmetry_sector);

}  // namespace steiner
