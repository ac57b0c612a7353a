#include "curvebound/constructions.hpp"

#include <cmath>

namespace curvebound {

FourPointWitness four_point_construction(const ConvexShape& shape) {
  const DiameterResult diam = diameter(shape);
  FourPointWitness w;
  w.a = diam.first;
  w.b = diam.second;
  w.o = 0.5 * (w.a + w.b);
  w.len_ab = diam.length;

  const Line bisector{w.o, rot90(w.b - w.a)};
  const auto hits = boundary_line_intersections(shape, bisector);
  if (hits.size() != 2)
    throw DegenerateShape("perpendicular bisector of a diameter must cross the boundary twice");
  w.c = hits[0];
  w.d = hits[1];
  if (distance(w.c, w.o) < distance(w.d, w.o)) std::swap(w.c, w.d);
  w.len_cd = distance(w.c, w.d);
  return w;
}

double double_perimeter_bound(const FourPointWitness& witness) {
  return 2.0 * witness.len_ab + 2.0 * witness.len_cd;
}

SupportSelection support_normal_selection(const ConvexShape& shape, int n, double phase) {
  if (n < 3) throw DegenerateInput("support selection needs n >= 3");
  SupportSelection sel;
  sel.points.reserve(static_cast<std::size_t>(n));
  sel.normals.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    const Direction normal(phase + kTwoPi * i / n);
    sel.points.push_back(support_point(shape, normal));
    sel.normals.push_back(normal);
  }
  double tour = 0.0;
  for (std::size_t i = 0; i < sel.points.size(); ++i)
    tour += distance(sel.points[i], sel.points[(i + 1) % sel.points.size()]);
  sel.polygon_perimeter = tour;
  return sel;
}

ConvexShape equal_arc_polygon(const ConvexShape& shape, int n, double anchor_arc) {
  if (n < 3) throw DegenerateInput("equal-arc polygon needs n >= 3");
  const BoundaryArc arc(shape);
  const double step = arc.total() / n;
  std::vector<Point> pts;
  pts.reserve(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) pts.push_back(arc.point_at(anchor_arc + step * j));
  return convex_hull(pts);
}

}  // namespace curvebound
