#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "curvebound/geometry.hpp"

namespace curvebound {

/// Hard cap on exact open-path enumeration (n!/2 orders).
inline constexpr int kMaxExactPathPoints = 10;

struct PathResult {
  std::vector<std::size_t> order;  // visiting order as input indices
  double length = 0.0;
  Polyline polyline;
};

/// Sum of consecutive segment lengths; 0 for a single point.
double path_length(const Polyline& line);

/// Global minimum open-path length over all visiting orders (endpoints
/// free), by exhaustive enumeration of n!/2 direction-canonical orders.
/// Ties resolve to the lexicographically smallest order. Throws
/// TooManyPoints above max_n (and always above the hard cap of 10).
PathResult shortest_path_through(std::span<const Point> points, int max_n = kMaxExactPathPoints);

/// For the triangle with the given apex, returns the ratio
/// |ab| / (|apex a| + |apex b|) and the lower bound sin(phi/2) where phi is
/// the apex angle. The ratio is always >= the bound. Throws
/// DegenerateTriangle on collinear or coincident points.
std::pair<double, double> triangle_angle_ratio_check(Point a, Point apex, Point b);

}  // namespace curvebound
