#include "curvebound/geometry.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>

namespace curvebound {

namespace {

// --- error-free transformations (Dekker/Knuth) -----------------------------
//
// orientation() filters the double evaluation with Shewchuk's static error
// bound and falls back to an exact 16-component expansion when the filter
// cannot decide the sign.

struct TwoDouble {
  double hi;
  double lo;
};

inline TwoDouble two_sum(double a, double b) {
  const double s = a + b;
  const double bb = s - a;
  const double err = (a - (s - bb)) + (b - bb);
  return {s, err};
}

inline TwoDouble two_diff(double a, double b) {
  const double s = a - b;
  const double bb = s - a;
  const double err = (a - (s - bb)) - (b + bb);
  return {s, err};
}

inline TwoDouble two_product(double a, double b) {
  const double p = a * b;
  const double err = std::fma(a, b, -p);
  return {p, err};
}

// Exact sign of the sum of the terms. Distills the terms into a
// nonoverlapping expansion whose top component carries the sign.
int expansion_sign(std::span<const double> terms) {
  std::array<double, 20> h{};
  std::size_t n = 0;
  for (double t : terms) {
    double q = t;
    for (std::size_t i = 0; i < n; ++i) {
      const auto [s, err] = two_sum(q, h[i]);
      h[i] = err;
      q = s;
    }
    h[n++] = q;
  }
  for (std::size_t i = n; i-- > 0;) {
    if (h[i] > 0.0) return 1;
    if (h[i] < 0.0) return -1;
  }
  return 0;
}

// Shewchuk's ccwerrboundA for the two-product difference form.
constexpr double kHalfUlp = std::numeric_limits<double>::epsilon() * 0.5;
constexpr double kOrientFilter = (3.0 + 16.0 * kHalfUlp) * kHalfUlp;

int orientation_exact(Point a, Point b, Point c) {
  const TwoDouble acx = two_diff(a.x, c.x);
  const TwoDouble bcy = two_diff(b.y, c.y);
  const TwoDouble acy = two_diff(a.y, c.y);
  const TwoDouble bcx = two_diff(b.x, c.x);

  std::array<double, 16> terms{};
  std::size_t n = 0;
  auto emit = [&](double u, double v, double sign) {
    const TwoDouble p = two_product(u, v);
    terms[n++] = sign * p.hi;
    terms[n++] = sign * p.lo;
  };
  emit(acx.hi, bcy.hi, +1.0);
  emit(acx.hi, bcy.lo, +1.0);
  emit(acx.lo, bcy.hi, +1.0);
  emit(acx.lo, bcy.lo, +1.0);
  emit(acy.hi, bcx.hi, -1.0);
  emit(acy.hi, bcx.lo, -1.0);
  emit(acy.lo, bcx.hi, -1.0);
  emit(acy.lo, bcx.lo, -1.0);
  return expansion_sign(std::span<const double>(terms.data(), n));
}

double polygon_scale(std::span<const Point> pts) {
  double s = 0.0;
  for (const Point& p : pts) s = std::max({s, std::abs(p.x), std::abs(p.y)});
  return std::max(s, 1e-300);
}

}  // namespace

int orientation(Point a, Point b, Point c) {
  const double detleft = (a.x - c.x) * (b.y - c.y);
  const double detright = (a.y - c.y) * (b.x - c.x);
  const double det = detleft - detright;
  const double detsum = std::abs(detleft) + std::abs(detright);
  if (std::abs(det) > kOrientFilter * detsum) return det > 0.0 ? 1 : -1;
  return orientation_exact(a, b, c);
}

Direction::Direction(double angle_radians) {
  if (!std::isfinite(angle_radians)) throw DegenerateInput("direction angle must be finite");
  double a = std::fmod(angle_radians, kTwoPi);
  if (a < 0.0) a += kTwoPi;
  if (a >= kTwoPi) a = 0.0;  // fmod rounding at the seam
  angle_ = a;
}

void validate(const Polyline& line) {
  if (line.points.empty()) throw DegenerateInput("polyline needs at least one point");
  for (const Point& p : line.points)
    if (!is_finite(p)) throw DegenerateInput("polyline has non-finite coordinates");
}

// ---------------------------------------------------------------------------
// ShapeSpec

std::string kind_name(const ShapeSpec& spec) {
  struct Visitor {
    std::string operator()(const PolygonSpec&) const { return "polygon"; }
    std::string operator()(const EllipseSpec&) const { return "ellipse"; }
    std::string operator()(const HalfEllipseSpec&) const { return "half_ellipse"; }
    std::string operator()(const LensSpec&) const { return "lens"; }
    std::string operator()(const RectangleSpec&) const { return "rectangle"; }
    std::string operator()(const DeltoidSpec&) const { return "deltoid_pair_member"; }
  };
  return std::visit(Visitor{}, spec);
}

void validate(const ShapeSpec& spec) {
  struct Visitor {
    void operator()(const PolygonSpec& s) const {
      if (s.vertices.size() < 3) throw DegenerateInput("polygon spec needs >= 3 vertices");
    }
    void operator()(const EllipseSpec& s) const {
      if (!(s.a_semi > 0.0) || !(s.b_semi > 0.0))
        throw DegenerateInput("ellipse semi-axes must be positive");
    }
    void operator()(const HalfEllipseSpec& s) const {
      if (!(s.k > 0.0) || !(s.k <= 1.0)) throw DegenerateInput("half-ellipse k must be in (0, 1]");
    }
    void operator()(const LensSpec& s) const {
      if (!(s.chord_half > 0.0) || !(s.sagitta > 0.0))
        throw DegenerateInput("lens parameters must be positive");
      if (!(s.sagitta < s.chord_half))
        throw DegenerateInput("lens sagitta must be smaller than the half-chord");
    }
    void operator()(const RectangleSpec& s) const {
      if (!(s.width > 0.0) || !(s.height > 0.0))
        throw DegenerateInput("rectangle sides must be positive");
    }
    void operator()(const DeltoidSpec& s) const {
      if (s.index != 0 && s.index != 1) throw UnsupportedSpec("deltoid member index must be 0 or 1");
    }
  };
  std::visit(Visitor{}, spec);
}

// ---------------------------------------------------------------------------
// ConvexShape

ConvexShape ConvexShape::from_ccw_vertices(std::vector<Point> vertices,
                                           std::optional<ShapeSpec> source,
                                           double collapse_factor) {
  for (const Point& p : vertices)
    if (!is_finite(p)) throw DegenerateInput("shape has non-finite coordinates");

  const double scale = polygon_scale(vertices);
  const double merge_tol = collapse_factor * scale;
  const double collinear_tol = kCollinearCollapseFactor * scale * scale;

  // Merge near-duplicate neighbors and collapse collinear triples until the
  // list is stable.
  bool changed = true;
  while (changed && vertices.size() >= 3) {
    changed = false;
    std::vector<Point> kept;
    kept.reserve(vertices.size());
    for (const Point& p : vertices) {
      if (!kept.empty() && distance(kept.back(), p) <= merge_tol) {
        changed = true;
        continue;
      }
      kept.push_back(p);
    }
    if (kept.size() >= 2 && distance(kept.front(), kept.back()) <= merge_tol) {
      kept.pop_back();
      changed = true;
    }
    vertices = std::move(kept);
    if (vertices.size() < 3) break;

    std::vector<Point> out;
    out.reserve(vertices.size());
    const std::size_t n = vertices.size();
    for (std::size_t i = 0; i < n; ++i) {
      const Point& prev = out.empty() ? vertices[(i + n - 1) % n] : out.back();
      const Point& cur = vertices[i];
      const Point& next = vertices[(i + 1) % n];
      if (std::abs(cross(cur - prev, next - cur)) < collinear_tol) {
        changed = true;
        continue;
      }
      out.push_back(cur);
    }
    vertices = std::move(out);
  }

  if (vertices.size() < 3) throw DegenerateInput("convex shape needs >= 3 non-collinear vertices");

  const std::size_t n = vertices.size();
  double area2 = 0.0;
  double turning = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = vertices[i];
    const Point& b = vertices[(i + 1) % n];
    const Point& c = vertices[(i + 2) % n];
    const int turn = orientation(a, b, c);
    if (turn < 0) throw DegenerateInput("vertices must be in counterclockwise convex position");
    if (turn == 0) throw DegenerateInput("collinear vertices survived collapse");
    area2 += cross(a, b);
    turning += std::atan2(cross(b - a, c - b), dot(b - a, c - b));
  }
  // Local left turns on a self-intersecting cycle wind more than once.
  if (std::abs(turning - kTwoPi) > 1e-6) throw DegenerateInput("vertex cycle is not a simple convex loop");
  if (!(area2 > 0.0)) throw DegenerateInput("shape must have positive area");

  ConvexShape shape;
  shape.vertices_ = std::move(vertices);
  shape.source_ = std::move(source);
  shape.scale_ = scale;
  return shape;
}

ConvexShape convex_hull(std::span<const Point> points) {
  std::vector<Point> pts(points.begin(), points.end());
  for (const Point& p : pts)
    if (!is_finite(p)) throw DegenerateInput("hull input has non-finite coordinates");
  std::sort(pts.begin(), pts.end(),
            [](Point a, Point b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) throw DegenerateInput("hull needs >= 3 distinct points");

  const std::size_t n = pts.size();
  std::vector<Point> hull(2 * n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {  // lower chain
    while (k >= 2 && orientation(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  const std::size_t lower = k + 1;
  for (std::size_t i = n - 1; i-- > 0;) {  // upper chain
    while (k >= lower && orientation(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  if (hull.size() < 3) throw DegenerateInput("hull input is collinear");
  return ConvexShape::from_ccw_vertices(std::move(hull), std::nullopt, 0.0);
}

double perimeter(const ConvexShape& shape) {
  const auto& v = shape.vertices();
  double len = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) len += distance(v[i], v[(i + 1) % v.size()]);
  return len;
}

double area(const ConvexShape& shape) {
  const auto& v = shape.vertices();
  double a2 = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) a2 += cross(v[i], v[(i + 1) % v.size()]);
  return 0.5 * a2;
}

namespace {

inline double dist2(Point a, Point b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  return dx * dx + dy * dy;
}

}  // namespace

DiameterResult diameter(const ConvexShape& shape) {
  const auto& v = shape.vertices();
  const std::size_t n = v.size();

  double best = -1.0;
  std::size_t bi = 0, bj = 0;
  auto consider = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    std::size_t lo = std::min(i, j), hi = std::max(i, j);
    const double d = dist2(v[lo], v[hi]);
    if (d > best || (d == best && (lo < bi || (lo == bi && hi < bj)))) {
      best = d;
      bi = lo;
      bj = hi;
    }
  };

  if (n == 3) {
    consider(0, 1);
    consider(0, 2);
    consider(1, 2);
  } else {
    // Rotating calipers over antipodal pairs; candidates are taken
    // generously around the advancing pointer so float ties cannot drop the
    // true maximum.
    std::size_t j = 1;
    for (std::size_t i = 0; i < n; ++i) {
      const Point edge = v[(i + 1) % n] - v[i];
      while (cross(edge, v[(j + 1) % n] - v[j]) > 0.0) j = (j + 1) % n;
      consider(i, j);
      consider((i + 1) % n, j);
      consider(i, (j + 1) % n);
      consider((i + 1) % n, (j + 1) % n);
    }
  }

  DiameterResult result;
  result.first_index = bi;
  result.second_index = bj;
  result.first = v[bi];
  result.second = v[bj];
  result.length = std::sqrt(best);
  return result;
}

std::size_t support_index(const ConvexShape& shape, const Direction& normal) {
  const Point u = normal.unit();
  const auto& v = shape.vertices();
  std::size_t best = 0;
  double best_dot = dot(v[0], u);
  for (std::size_t i = 1; i < v.size(); ++i) {
    const double d = dot(v[i], u);
    if (d > best_dot) {
      best_dot = d;
      best = i;
    }
  }
  return best;
}

Point support_point(const ConvexShape& shape, const Direction& normal) {
  return shape.vertices()[support_index(shape, normal)];
}

std::vector<Point> boundary_line_intersections(const ConvexShape& shape, const Line& line) {
  if (!is_finite(line.point) || !is_finite(line.direction) ||
      (line.direction.x == 0.0 && line.direction.y == 0.0))
    throw DegenerateInput("line needs a finite point and nonzero direction");

  const auto& v = shape.vertices();
  const std::size_t n = v.size();
  const Point p = line.point;
  const Point q = line.point + line.direction;

  std::vector<int> side(n);
  for (std::size_t i = 0; i < n; ++i) side[i] = orientation(p, q, v[i]);

  std::vector<Point> hits;
  for (std::size_t i = 0; i < n; ++i) {
    if (side[i] == 0) {
      hits.push_back(v[i]);
      continue;
    }
    const std::size_t j = (i + 1) % n;
    if (side[j] == 0 || side[i] == side[j]) continue;
    const Point a = v[i];
    const Point b = v[j];
    const double denom = cross(line.direction, b - a);
    const double t = cross(line.direction, p - a) / denom;
    hits.push_back(a + t * (b - a));
  }
  if (hits.empty()) return hits;

  auto proj = [&](Point x) { return dot(x - p, line.direction); };
  std::sort(hits.begin(), hits.end(), [&](Point a, Point b) { return proj(a) < proj(b); });
  const double tol = kContainmentTolFactor * std::max(1.0, shape.scale());
  std::vector<Point> out;
  for (const Point& h : hits)
    if (out.empty() || distance(out.back(), h) > tol) out.push_back(h);
  if (out.size() > 2) out = {out.front(), out.back()};  // grazing run along an edge
  return out;
}

bool contains_point(const ConvexShape& shape, Point p, double tolerance) {
  const auto& v = shape.vertices();
  const std::size_t n = v.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point a = v[i];
    const Point b = v[(i + 1) % n];
    const double signed_area = cross(b - a, p - a);
    if (signed_area < -tolerance * distance(a, b)) return false;
  }
  return true;
}

bool contains_shape(const ConvexShape& outer, const ConvexShape& inner) {
  const double tol = kContainmentTolFactor * std::max(1.0, outer.scale());
  for (const Point& p : inner.vertices())
    if (!contains_point(outer, p, tol)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Discretization

namespace {

std::vector<Point> ellipse_vertices(const EllipseSpec& s, int n) {
  std::vector<Point> v(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    const double t = kTwoPi * j / n;
    v[static_cast<std::size_t>(j)] = {s.a_semi * std::cos(t), s.b_semi * std::sin(t)};
  }
  return v;
}

std::vector<Point> half_ellipse_vertices(const HalfEllipseSpec& s, int n) {
  // n vertices total: the arc from b = (1, 0) to a = (-1, 0) in n - 1 equal
  // parameter steps; the flat side closes the loop.
  const int m = n - 1;
  std::vector<Point> v;
  v.reserve(static_cast<std::size_t>(n));
  v.push_back({1.0, 0.0});
  for (int j = 1; j < m; ++j) {
    const double t = kPi * j / m;
    v.push_back({std::cos(t), s.k * std::sin(t)});
  }
  v.push_back({-1.0, 0.0});
  return v;
}

std::vector<Point> lens_vertices(const LensSpec& s, int n) {
  // Corner a first, then the lower arc to corner b, then the upper arc back.
  // Vertex count is rounded up to a multiple of 4 so each arc has an even
  // segment count and the arc midpoints (0, +-sagitta) are vertices.
  const int per_arc = std::max(4, ((n + 3) / 4) * 2);
  const double c = s.chord_half;
  const double R = (c * c + s.sagitta * s.sagitta) / (2.0 * s.sagitta);
  const double cy = s.sagitta - R;  // center of the upper arc
  const double alpha_b = std::atan2(R - s.sagitta, c);
  const double alpha_a = kPi - alpha_b;

  std::vector<Point> upper(static_cast<std::size_t>(per_arc) + 1);
  for (int j = 0; j <= per_arc; ++j) {
    const double t = alpha_b + (alpha_a - alpha_b) * j / per_arc;
    upper[static_cast<std::size_t>(j)] = {R * std::cos(t), cy + R * std::sin(t)};
  }
  upper.front() = {c, 0.0};
  upper.back() = {-c, 0.0};
  upper[static_cast<std::size_t>(per_arc / 2)] = {0.0, s.sagitta};

  std::vector<Point> v;
  v.reserve(2 * static_cast<std::size_t>(per_arc));
  for (int j = per_arc; j >= 1; --j) {
    const Point u = upper[static_cast<std::size_t>(j)];
    v.push_back({u.x, -u.y});
  }
  for (int j = 0; j < per_arc; ++j) v.push_back(upper[static_cast<std::size_t>(j)]);
  return v;
}

std::vector<Point> rectangle_vertices(const RectangleSpec& s) {
  return {{0.0, 0.0}, {s.width, 0.0}, {s.width, s.height}, {0.0, s.height}};
}

std::vector<Point> deltoid_vertices(const DeltoidSpec& s) {
  // Unit equilateral triangle a, b, c with the kite apex d on the symmetry
  // axis through b. index 0: |bd| = 1 (apex angle 150 deg);
  // index 1: |bd| = 2/sqrt(3) (apex angle 120 deg).
  const double h = std::sqrt(3.0) / 2.0;
  const double axis = s.index == 0 ? 1.0 : 2.0 / std::sqrt(3.0);
  return {{h, 0.5}, {0.0, 0.0}, {h, -0.5}, {axis, 0.0}};
}

}  // namespace

ConvexShape discretize(const ShapeSpec& spec, int n_vertices) {
  validate(spec);
  if (const auto* poly = std::get_if<PolygonSpec>(&spec))
    return ConvexShape::from_ccw_vertices(poly->vertices, spec);
  if (n_vertices < 8) throw DegenerateInput("discretization needs >= 8 vertices");

  std::vector<Point> v;
  if (const auto* e = std::get_if<EllipseSpec>(&spec)) v = ellipse_vertices(*e, n_vertices);
  if (const auto* he = std::get_if<HalfEllipseSpec>(&spec)) v = half_ellipse_vertices(*he, n_vertices);
  if (const auto* l = std::get_if<LensSpec>(&spec)) v = lens_vertices(*l, n_vertices);
  if (const auto* r = std::get_if<RectangleSpec>(&spec)) v = rectangle_vertices(*r);
  if (const auto* d = std::get_if<DeltoidSpec>(&spec)) v = deltoid_vertices(*d);
  return ConvexShape::from_ccw_vertices(std::move(v), spec);
}

// ---------------------------------------------------------------------------
// Exact perimeters

double ellipse_perimeter_exact(double a_semi, double b_semi) {
  if (!(a_semi > 0.0) || !(b_semi > 0.0)) throw DegenerateInput("semi-axes must be positive");
  double a = a_semi, b = b_semi;
  if (a < b) std::swap(a, b);
  if (a == b) return kTwoPi * a;

  // P = 4 a E(e) with the AGM: E/K = 1 - sum_{n>=0} 2^{n-1} c_n^2 and
  // K = pi / (2 agm(1, b/a)), where c_n^2 = x_n^2 - y_n^2.
  long double x = 1.0L;
  long double y = static_cast<long double>(b) / a;
  long double csum = 0.5L * (x * x - y * y);
  long double pow2 = 1.0L;
  for (int iter = 0; iter < 64; ++iter) {
    const long double c = 0.5L * (x - y);
    const long double xn = 0.5L * (x + y);
    y = std::sqrt(x * y);
    x = xn;
    const long double term = pow2 * c * c;
    csum += term;
    pow2 *= 2.0L;
    if (term < 1e-36L && iter > 2) break;
  }
  const long double pi_l = 3.14159265358979323846264338327950288L;
  return static_cast<double>(2.0L * pi_l * a / x * (1.0L - csum));
}

double cayley_half_perimeter(double k) {
  if (!(k > 0.0) || !(k < 1.0)) throw DegenerateInput("k must be in (0, 1)");
  return 2.0 + 0.5 * k * k * std::log(1.0 / k);
}

double half_ellipse_perimeter_exact(double k) {
  return 2.0 + 0.5 * ellipse_perimeter_exact(1.0, k);
}

double spec_perimeter_exact(const ShapeSpec& spec) {
  validate(spec);
  struct Visitor {
    double operator()(const PolygonSpec& s) const {
      double len = 0.0;
      for (std::size_t i = 0; i < s.vertices.size(); ++i)
        len += distance(s.vertices[i], s.vertices[(i + 1) % s.vertices.size()]);
      return len;
    }
    double operator()(const EllipseSpec& s) const { return ellipse_perimeter_exact(s.a_semi, s.b_semi); }
    double operator()(const HalfEllipseSpec& s) const { return half_ellipse_perimeter_exact(s.k); }
    double operator()(const LensSpec& s) const {
      const double R = (s.chord_half * s.chord_half + s.sagitta * s.sagitta) / (2.0 * s.sagitta);
      const double theta = std::atan2(s.chord_half, R - s.sagitta);
      return 4.0 * R * theta;
    }
    double operator()(const RectangleSpec& s) const { return 2.0 * (s.width + s.height); }
    double operator()(const DeltoidSpec& s) const {
      const auto v = deltoid_vertices(s);
      double len = 0.0;
      for (std::size_t i = 0; i < v.size(); ++i) len += distance(v[i], v[(i + 1) % v.size()]);
      return len;
    }
  };
  return std::visit(Visitor{}, spec);
}

// ---------------------------------------------------------------------------
// Boundary parametrization

BoundaryArc::BoundaryArc(const ConvexShape& shape) : vertices_(shape.vertices()) {
  cumulative_.resize(vertices_.size() + 1);
  cumulative_[0] = 0.0;
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    cumulative_[i + 1] = cumulative_[i] + distance(vertices_[i], vertices_[(i + 1) % vertices_.size()]);
}

Point BoundaryArc::point_at(double s) const {
  const double total = cumulative_.back();
  s = std::fmod(s, total);
  if (s < 0.0) s += total;
  const auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), s);
  std::size_t i = static_cast<std::size_t>(std::max<std::ptrdiff_t>(0, it - cumulative_.begin() - 1));
  if (i >= vertices_.size()) i = vertices_.size() - 1;
  const Point a = vertices_[i];
  const Point b = vertices_[(i + 1) % vertices_.size()];
  const double edge = cumulative_[i + 1] - cumulative_[i];
  const double t = edge > 0.0 ? (s - cumulative_[i]) / edge : 0.0;
  return a + t * (b - a);
}

Polyline boundary_polyline(const ConvexShape& shape, bool closed) {
  Polyline line{shape.vertices()};
  if (closed) line.points.push_back(shape.vertices().front());
  return line;
}

}  // namespace curvebound
