#include "curvebound/witnesses.hpp"

#include <algorithm>
#include <cmath>

namespace curvebound {

RectangleWitness make_rectangle_witness(double length, int n) {
  if (!(length > 1.0)) throw DegenerateInput("rectangle witness needs L > 1");
  if (n < 2) throw DegenerateInput("rectangle witness needs n >= 2");

  RectangleWitness w{.shape = discretize(RectangleSpec{length, 1.0}, 8),
                     .points = {},
                     .path = {},
                     .half_perimeter = length + 1.0,
                     .length = length,
                     .n = n};

  // Comb path: n unit rungs joined by horizontal runs totalling L. The i-th
  // point sits at the far end of the i-th rung, alternating between the two
  // long sides, so the path has length exactly L + n.
  const double step = length / (n - 1);
  double x = 0.0;
  double y = 0.0;
  w.path.points.push_back({x, y});
  for (int i = 0; i < n; ++i) {
    y = (i % 2 == 0) ? 1.0 : 0.0;
    w.path.points.push_back({x, y});
    w.points.push_back({x, y});
    if (i + 1 < n) {
      x = (i + 1 == n - 1) ? length : x + step;
      w.path.points.push_back({x, y});
    }
  }
  return w;
}

LensSpec make_lens(double radius, double half_angle, bool require_thin, double max_apex_angle) {
  if (!(radius > 0.0)) throw DegenerateInput("lens radius must be positive");
  if (!(half_angle > 0.0) || !(half_angle < kPi / 2.0))
    throw DegenerateInput("lens half-angle must be in (0, pi/2)");
  if (require_thin && 2.0 * half_angle >= max_apex_angle)
    throw NotThin("lens apex angle " + std::to_string(2.0 * half_angle) +
                  " rad is not below the thin-regime limit " + std::to_string(max_apex_angle));
  LensSpec spec;
  spec.chord_half = radius * std::sin(half_angle);
  spec.sagitta = radius * (1.0 - std::cos(half_angle));
  return spec;
}

double lens_apex_angle(const LensSpec& spec) {
  const double R =
      (spec.chord_half * spec.chord_half + spec.sagitta * spec.sagitta) / (2.0 * spec.sagitta);
  return 2.0 * std::atan2(spec.chord_half, R - spec.sagitta);
}

HalfEllipseSpec make_half_ellipse(double k) {
  if (!(k > 0.0) || !(k <= 1.0)) throw DegenerateInput("half-ellipse k must be in (0, 1]");
  return HalfEllipseSpec{k};
}

Point half_ellipse_arc_point(double k, double t) {
  if (!(t >= 0.0) || !(t <= 1.0)) throw DegenerateInput("arc parameter must be in [0, 1]");
  if (t == 0.0) return {-1.0, 0.0};
  if (t == 1.0) return {1.0, 0.0};
  const double theta = kPi * (1.0 - t);
  return {std::cos(theta), k * std::sin(theta)};
}

namespace {

/// Arc parameter in [0, 1] of a point expected on the E_k arc; tolerance is
/// relative to the unit major axis.
double arc_param_of(Point p, double k) {
  if (std::abs(p.x) > 1.0 + 1e-9 || p.y < -1e-9 * k)
    throw OrderViolation("point is not on the half-ellipse arc");
  const double expected_y = k * std::sqrt(std::max(0.0, 1.0 - std::min(1.0, std::abs(p.x)) *
                                                             std::min(1.0, std::abs(p.x))));
  if (std::abs(p.y - expected_y) > 1e-9 * std::max(1.0, k))
    throw OrderViolation("point is not on the half-ellipse arc");
  const double theta = std::atan2(p.y / k, p.x);
  return 1.0 - std::clamp(theta / kPi, 0.0, 1.0);
}

}  // namespace

std::pair<double, double> adding_vertex_excess(Point prev, Point mid, Point next, double k) {
  if (!(k > 0.0) || !(k <= 1.0)) throw DegenerateInput("half-ellipse k must be in (0, 1]");
  const double tp = arc_param_of(prev, k);
  const double tm = arc_param_of(mid, k);
  const double tn = arc_param_of(next, k);
  const double lo = std::min(tp, tn);
  const double hi = std::max(tp, tn);
  if (!(tm > lo) || !(tm < hi))
    throw OrderViolation("mid point must lie strictly between its neighbors on the arc");
  const double excess = distance(prev, mid) + distance(mid, next) - distance(prev, next);
  const double bound = 2.0 * std::sqrt(1.0 + k * k) - 2.0;
  return {excess, bound};
}

HalfEllipseWitness half_ellipse_witness(double k, std::span<const double> arc_params) {
  if (!(k > 0.0) || !(k <= 1.0)) throw DegenerateInput("half-ellipse k must be in (0, 1]");
  if (arc_params.size() < 2) throw DegenerateInput("witness needs at least two arc points");
  HalfEllipseWitness w;
  w.k = k;
  w.n = static_cast<int>(arc_params.size());
  double prev_t = -1.0;
  for (double t : arc_params) {
    if (t < prev_t) throw OrderViolation("arc parameters must be ordered from a to b");
    prev_t = t;
    w.points.push_back(half_ellipse_arc_point(k, t));
  }
  for (std::size_t i = 1; i < w.points.size(); ++i)
    w.chain_length += distance(w.points[i - 1], w.points[i]);
  const double root = std::sqrt(1.0 + k * k);
  w.bound_small2 = 2.0 * root - 2.0;
  w.bound_chain = 2.0 * (w.n - 2) * (root - 1.0) + 2.0;
  w.half_perimeter_exact = 0.5 * half_ellipse_perimeter_exact(k);
  return w;
}

CheckReport chain_bound_check(const HalfEllipseWitness& witness) {
  CheckReport report;
  report.theorem_id = TheoremId::T3_chain_bound;
  report.lhs = witness.bound_chain;
  report.rhs = witness.half_perimeter_exact;
  report.slack = report.rhs - report.lhs;
  report.tolerance_used = 1e-12;
  report.n = witness.n;
  report.shape_provenance = "half_ellipse(k=" + format_double(witness.k) + ")";
  report.pass = witness.chain_length <= witness.bound_chain + 1e-12 && report.slack > 0.0;
  return report;
}

DeltoidPair make_deltoid_pair() {
  DeltoidPair pair{.quad_d = discretize(DeltoidSpec{0}, 8),
                   .quad_dprime = discretize(DeltoidSpec{1}, 8),
                   .value_d = 0.0,
                   .value_dprime = 0.0};
  pair.value_d = perimeter(pair.quad_d) - diameter(pair.quad_d).length;
  pair.value_dprime = perimeter(pair.quad_dprime) - diameter(pair.quad_dprime).length;
  return pair;
}

}  // namespace curvebound
