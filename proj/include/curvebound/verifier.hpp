#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "curvebound/constructions.hpp"
#include "curvebound/geometry.hpp"
#include "curvebound/reporting.hpp"

namespace curvebound {

/// Nonstrict inequalities pass with slack >= -kNonstrictTolFactor * scale;
/// proven strict inequalities must clear +kStrictTolFactor * scale.
inline constexpr double kNonstrictTolFactor = 1e-9;
inline constexpr double kStrictTolFactor = 1e-9;

/// Convex polygon with exactly n vertices, distributed per Valtr's
/// uniform-convex-position construction over the unit square.
/// Deterministic for fixed (n, seed).
ConvexShape random_convex_polygon(int n, std::uint64_t seed);

/// A polyline whose convex hull contains the shape: boundary traversals,
/// vertex permutations, or outward-perturbed tours. Coverage is verified
/// and regenerated on failure (bounded retries).
Polyline random_covering_curve(const ConvexShape& shape, std::uint64_t seed);

/// A polyline through all vertices of the shape, in random visiting order.
Polyline random_vertex_curve(const ConvexShape& shape, std::uint64_t seed);

/// Evaluates one theorem on one shape. aux is required for the
/// curve-dependent checks (T4 needs a curve through all vertices, BARRIER a
/// covering curve) and ignored otherwise; n parametrizes T5 (support
/// normals) and BOLLOBAS (equal arcs). Throws MissingAux when a required
/// curve is absent or unusable.
CheckReport check_theorem(TheoremId id, const ConvexShape& shape,
                          const std::optional<Polyline>& aux = std::nullopt, int n = 0);

/// True iff the hull of the curve contains the shape within tolerance.
bool curve_covers_shape(const Polyline& curve, const ConvexShape& shape, double tolerance);

struct MaximinResult {
  int k = 0;
  std::vector<Point> best_points;
  std::vector<double> best_arcs;  // arc-length positions of the points
  double value = 0.0;             // shortest-path length through best_points
  long iterations = 0;
  bool converged = false;
};

/// Multi-start coordinate ascent over arc-length positions of k boundary
/// points, maximizing the exact shortest-path length through them. The
/// result is a lower bound on the true maximin.
MaximinResult maximin_point_selection(const ConvexShape& shape, int k, int restarts,
                                      std::uint64_t seed);

/// Exhaustive maximin over all point tuples from a uniform arc-length grid
/// anchored at vertex 0; exact on the grid. Supports k = 2 and k = 3.
MaximinResult maximin_grid_oracle(const ConvexShape& shape, int k, int resolution);

struct ConjectureTrial {
  std::uint64_t seed = 0;
  int family = 0;
  double slack = 0.0;
  std::string description;
};

struct ConjectureSearchReport {
  long trials = 0;
  double min_slack = 0.0;
  ConjectureTrial worst;
  /// Trials whose slack fell below -tolerance and re-verified their hull
  /// coverage and slack at tightened tolerance; reproduction JSON blobs.
  std::vector<std::string> candidates;
};

/// Random (shape, covering curve) pairs plus adversarial families; records
/// the minimum of length(curve) - (per K - diam K). Never asserts a sign:
/// the underlying conjecture is open.
ConjectureSearchReport conjecture_search(long trials, std::uint64_t seed);

}  // namespace curvebound
