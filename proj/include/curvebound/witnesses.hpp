#pragma once

#include <span>
#include <utility>
#include <vector>

#include "curvebound/geometry.hpp"
#include "curvebound/reporting.hpp"

namespace curvebound {

/// Apex angle below which the lens three-point argument applies.
inline constexpr double kThinLensApexLimit = kPi / 3.0;

/// A 1 x L rectangle with n boundary points visited by a comb-shaped path of
/// length exactly L + n, against a half-perimeter of L + 1.
struct RectangleWitness {
  ConvexShape shape;
  std::vector<Point> points;
  Polyline path;
  double half_perimeter = 0.0;
  double length = 0.0;  // L
  int n = 0;
};

RectangleWitness make_rectangle_witness(double length, int n);

/// Lens from two identical circular segments of radius R subtending the
/// central half-angle half_angle; the corner apex angle is 2 * half_angle.
/// With require_thin, throws NotThin unless the apex angle is below
/// max_apex_angle (default 60 degrees, where the three-point optimality
/// argument holds).
LensSpec make_lens(double radius, double half_angle, bool require_thin = true,
                   double max_apex_angle = kThinLensApexLimit);

double lens_apex_angle(const LensSpec& spec);

/// Half of an ellipse with semi-axes 1 and k, flat side from (-1, 0) to
/// (1, 0); the extreme points are the arc.
HalfEllipseSpec make_half_ellipse(double k);

/// Point on the half-ellipse arc at parameter t in [0, 1]; t = 0 is a =
/// (-1, 0) and t = 1 is b = (1, 0).
Point half_ellipse_arc_point(double k, double t);

/// Detour excess |prev mid| + |mid next| - |prev next| for three arc points
/// with mid strictly between, and the bound 2 sqrt(1 + k^2) - 2. Throws
/// OrderViolation when mid is not between prev and next along the arc.
std::pair<double, double> adding_vertex_excess(Point prev, Point mid, Point next, double k);

/// n points on the half-ellipse arc ordered from a to b, with the chain
/// length and the closed-form bounds it must satisfy.
struct HalfEllipseWitness {
  double k = 0.0;
  int n = 0;
  std::vector<Point> points;
  double chain_length = 0.0;
  double bound_small2 = 0.0;          // 2 sqrt(1 + k^2) - 2
  double bound_chain = 0.0;           // 2 (n - 2) (sqrt(1 + k^2) - 1) + 2
  double half_perimeter_exact = 0.0;  // (1/2) per E_k via the elliptic integral
};

/// Builds the witness from arc parameters in [0, 1]; parameters must be
/// nondecreasing (a-to-b order).
HalfEllipseWitness half_ellipse_witness(double k, std::span<const double> arc_params);

/// Verifies chain_length <= bound_chain and reports the slack
/// (1/2) per E_k - bound_chain; passes when the chain bound still sits below
/// the half perimeter.
CheckReport chain_bound_check(const HalfEllipseWitness& witness);

/// The two deltoids over the unit equilateral triangle whose per - diam
/// values reverse under inclusion.
struct DeltoidPair {
  ConvexShape quad_d;        // apex angle 150 deg, axis 1
  ConvexShape quad_dprime;   // apex angle 120 deg, axis 2/sqrt(3)
  double value_d = 0.0;      // per - diam of quad_d
  double value_dprime = 0.0; // per - diam of quad_dprime
};

DeltoidPair make_deltoid_pair();

}  // namespace curvebound
