#pragma once

#include <cmath>
#include <cstddef>
#include <numbers>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "curvebound/errors.hpp"

namespace curvebound {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Collinear vertex triples with |cross| below this factor times scale^2 are
/// collapsed when a shape is built.
inline constexpr double kCollinearCollapseFactor = 1e-12;
/// Consecutive vertices closer than this factor times scale are merged.
inline constexpr double kDefaultCollapseFactor = 1e-12;
/// Signed-distance tolerance factor for point/shape containment.
inline constexpr double kContainmentTolFactor = 1e-12;

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend constexpr Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
  friend constexpr Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
  friend constexpr Point operator*(double t, Point p) { return {t * p.x, t * p.y}; }
  friend constexpr Point operator*(Point p, double t) { return {t * p.x, t * p.y}; }
  friend constexpr bool operator==(Point a, Point b) { return a.x == b.x && a.y == b.y; }
};

constexpr double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
constexpr double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point p) { return std::hypot(p.x, p.y); }
inline double distance(Point a, Point b) { return norm(a - b); }
inline bool is_finite(Point p) { return std::isfinite(p.x) && std::isfinite(p.y); }
/// Counterclockwise quarter turn.
constexpr Point rot90(Point p) { return {-p.y, p.x}; }

/// An angle normalized to [0, 2*pi), used for outer normals.
class Direction {
 public:
  explicit Direction(double angle_radians);
  double angle() const { return angle_; }
  Point unit() const { return {std::cos(angle_), std::sin(angle_)}; }

 private:
  double angle_;
};

/// Ordered finite point sequence; represents curves and candidate paths.
struct Polyline {
  std::vector<Point> points;
};

/// Throws DegenerateInput unless the polyline has >= 1 finite point.
void validate(const Polyline& line);

/// Exact sign of the orientation of the triple (a, b, c):
/// +1 counterclockwise, -1 clockwise, 0 collinear. Uses a floating-point
/// filter with an error-free-transformation fallback, so the sign is exact
/// for all double inputs.
int orientation(Point a, Point b, Point c);

// ---------------------------------------------------------------------------
// Shape descriptions

struct PolygonSpec {
  std::vector<Point> vertices;  // counterclockwise
};
struct EllipseSpec {
  double a_semi;
  double b_semi;
};
struct HalfEllipseSpec {
  double k;  // minor semi-axis; major semi-axis fixed at 1, flat side on the x-axis
};
struct LensSpec {
  double chord_half;  // half the shared chord
  double sagitta;     // arc height above the chord; sagitta < chord_half
};
struct RectangleSpec {
  double width;
  double height;
};
struct DeltoidSpec {
  int index;  // 0: apex angle 150 deg (axis 1). 1: apex angle 120 deg (axis 2/sqrt(3)).
};

using ShapeSpec =
    std::variant<PolygonSpec, EllipseSpec, HalfEllipseSpec, LensSpec, RectangleSpec, DeltoidSpec>;

std::string kind_name(const ShapeSpec& spec);
/// Throws UnsupportedSpec / DegenerateInput on out-of-range parameters.
void validate(const ShapeSpec& spec);

// ---------------------------------------------------------------------------
// Convex shapes

/// A convex polygon with counterclockwise, strictly convex vertices.
/// Smooth shapes enter the toolkit as inscribed polygons (see discretize).
class ConvexShape {
 public:
  /// Validates and canonicalizes a counterclockwise vertex list: merges
  /// near-duplicate consecutive vertices, collapses collinear triples, then
  /// requires >= 3 vertices with strictly positive turns and positive area.
  /// Throws DegenerateInput otherwise (including clockwise input).
  static ConvexShape from_ccw_vertices(std::vector<Point> vertices,
                                       std::optional<ShapeSpec> source = std::nullopt,
                                       double collapse_factor = kDefaultCollapseFactor);

  const std::vector<Point>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  const Point& vertex(std::size_t i) const { return vertices_[i % vertices_.size()]; }
  /// Parametric description this polygon was discretized from, if any.
  const std::optional<ShapeSpec>& source() const { return source_; }
  /// Coordinate magnitude bound used to scale tolerances; always >= 1e-300.
  double scale() const { return scale_; }

 private:
  ConvexShape() = default;
  std::vector<Point> vertices_;
  std::optional<ShapeSpec> source_;
  double scale_ = 0.0;
};

struct DiameterResult {
  Point first;
  Point second;
  std::size_t first_index;
  std::size_t second_index;
  double length;
};

/// Minimal counterclockwise convex polygon containing all input points;
/// collinear boundary points are removed. Throws DegenerateInput when fewer
/// than 3 distinct points remain or all points are collinear.
ConvexShape convex_hull(std::span<const Point> points);

double perimeter(const ConvexShape& shape);
double area(const ConvexShape& shape);

/// Farthest vertex pair by rotating calipers; ties broken by the
/// lexicographically smallest index pair. Agrees exactly with the
/// brute-force pairwise maximum.
DiameterResult diameter(const ConvexShape& shape);

/// Index of a vertex maximizing the inner product with the outward normal;
/// ties go to the lowest index.
std::size_t support_index(const ConvexShape& shape, const Direction& normal);
Point support_point(const ConvexShape& shape, const Direction& normal);

struct Line {
  Point point;
  Point direction;  // need not be normalized; must be nonzero
};

/// The at most two points where the infinite line meets the polygon
/// boundary, ordered by increasing projection onto the line direction.
/// A line through a vertex yields that vertex once; a line containing an
/// edge yields the edge endpoints.
std::vector<Point> boundary_line_intersections(const ConvexShape& shape, const Line& line);

/// True iff the point is inside or on the boundary within the signed
/// distance tolerance.
bool contains_point(const ConvexShape& shape, Point p, double tolerance);
/// True iff every vertex of inner lies in outer within 1e-12 * scale signed
/// distance.
bool contains_shape(const ConvexShape& outer, const ConvexShape& inner);

/// Inscribed polygon with vertices exactly on the parametric boundary.
/// Corner points of half-ellipse and lens shapes are always vertices; the
/// lens vertex count is rounded up to a multiple of 4 so that both arc
/// midpoints are vertices. Polygon specs pass through unchanged.
/// Requires n_vertices >= 8 for parametric kinds.
ConvexShape discretize(const ShapeSpec& spec, int n_vertices);

/// Full-ellipse perimeter via the arithmetic-geometric mean, converged to
/// ~1e-14 relative.
double ellipse_perimeter_exact(double a_semi, double b_semi);

/// Explicit terms of the half-perimeter asymptotic for the half-ellipse
/// shape with semi-axes 1 and k: 2 + (1/2) k^2 log(1/k). Only accurate for
/// small k; the exact elliptic value is used wherever a comparison matters.
double cayley_half_perimeter(double k);

/// Exact boundary length of a shape description (closed forms; ellipse via
/// the AGM). For polygon specs, the polygon perimeter.
double spec_perimeter_exact(const ShapeSpec& spec);

/// Boundary length of the half-ellipse shape: half the ellipse perimeter
/// plus the length-2 flat side.
double half_ellipse_perimeter_exact(double k);

/// Arc-length parametrization of the boundary, counterclockwise from
/// vertex 0.
class BoundaryArc {
 public:
  explicit BoundaryArc(const ConvexShape& shape);
  double total() const { return cumulative_.back(); }
  /// Point at arc-length s from vertex 0 (s taken modulo the total).
  Point point_at(double s) const;

 private:
  std::vector<Point> vertices_;
  std::vector<double> cumulative_;  // cumulative_[i] = length up to vertex i
};

/// Boundary traversal as a polyline, starting at vertex 0; when closed, the
/// first vertex is repeated at the end.
Polyline boundary_polyline(const ConvexShape& shape, bool closed);

}  // namespace curvebound
