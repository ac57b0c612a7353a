#pragma once

#include <cstdint>
#include <span>

#include "curvebound/geometry.hpp"
#include "curvebound/reporting.hpp"

namespace curvebound {

/// Line grid for the integral-geometry length estimate: directions phi
/// midpoint-sampled on [0, pi), signed offsets p midpoint-sampled on
/// [-p_max, p_max].
struct CroftonGrid {
  int n_angles = 720;
  int n_offsets = 2000;
  double p_max = 0.0;
};

/// Grid with the default resolution and p_max = 1.05 times the circumradius
/// of the points about the origin.
CroftonGrid default_crofton_grid(std::span<const Point> points);

/// Number of intersection points of the polyline with the line
/// {x cos(phi) + y sin(phi) = p}: one per transversal crossing, and one per
/// run of consecutive points lying exactly on the line.
int line_intersection_count(const Polyline& curve, const Direction& phi, double p);

/// Midpoint-rule estimate of (1/2) * integral of the intersection count over
/// the line grid; converges to the polyline length as the grid refines.
/// When closed_convex_guard is set, throws GridTooCoarse if no grid line
/// records at least 2 crossings.
double crofton_length(const Polyline& curve, const CroftonGrid& grid,
                      bool closed_convex_guard = false);

struct DominanceResult {
  double fraction = 0.0;  // grid cells where the curve count covers the boundary count
  std::uint64_t cells = 0;
  std::uint64_t violations = 0;
  double curve_length_estimate = 0.0;
  double boundary_length_estimate = 0.0;
};

/// Fraction of grid cells where the closed curve's intersection count is at
/// least the boundary's. Violations occur only near tangencies, so the
/// fraction tends to 1 as the grid refines.
DominanceResult crofton_dominance(const Polyline& curve, const Polyline& boundary,
                                  const CroftonGrid& grid);

/// crofton_dominance wrapped as a verdict: passes when the dominated
/// fraction is at least required_fraction.
CheckReport crofton_dominance_check(const Polyline& curve, const Polyline& boundary,
                                    const CroftonGrid& grid, double required_fraction = 0.999);

}  // namespace curvebound
