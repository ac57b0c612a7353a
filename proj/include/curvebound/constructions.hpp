#pragma once

#include <vector>

#include "curvebound/geometry.hpp"

namespace curvebound {

/// Diameter endpoints a, b plus the two intersections c, d of the
/// perpendicular bisector of ab with the boundary, labeled |co| >= |do|.
struct FourPointWitness {
  Point a;
  Point b;
  Point c;
  Point d;
  Point o;  // midpoint of ab
  double len_ab = 0.0;
  double len_cd = 0.0;
};

/// Builds the four-point witness. The bisector passes through the interior
/// point o, so it always meets the boundary twice; anything else throws
/// DegenerateShape.
FourPointWitness four_point_construction(const ConvexShape& shape);

/// The perimeter upper bound 2|ab| + 2|cd| from the witness.
double double_perimeter_bound(const FourPointWitness& witness);

/// One support vertex per outer normal at angles phase + 2*pi*i/n, i = 1..n.
/// Vertices may repeat; polygon_perimeter is the closed-tour length through
/// the selection (repeats contribute nothing).
struct SupportSelection {
  std::vector<Point> points;
  std::vector<Direction> normals;
  double polygon_perimeter = 0.0;
};

SupportSelection support_normal_selection(const ConvexShape& shape, int n, double phase = 0.0);

/// Inscribed n-gon whose vertices divide the boundary length into n equal
/// parts, starting anchor_arc along the boundary from vertex 0.
ConvexShape equal_arc_polygon(const ConvexShape& shape, int n, double anchor_arc = 0.0);

}  // namespace curvebound
