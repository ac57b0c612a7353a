#include "curvebound/verifier.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "curvebound/paths.hpp"
#include "curvebound/rng.hpp"
#include "curvebound/shape_io.hpp"

namespace curvebound {

// ---------------------------------------------------------------------------
// Corpus generation

ConvexShape random_convex_polygon(int n, std::uint64_t seed) {
  if (n < 3) throw DegenerateInput("random polygon needs n >= 3");

  for (std::uint64_t attempt = 0; attempt < 64; ++attempt) {
    Rng rng(derive_seed(seed, attempt));

    // Valtr: random x and y multisets, split into two monotone chains each,
    // pair the resulting displacement lists at random, sort by angle, walk.
    auto chain_deltas = [&](std::vector<double>& vals) {
      std::sort(vals.begin(), vals.end());
      const double lo = vals.front();
      const double hi = vals.back();
      std::vector<double> deltas;
      deltas.reserve(vals.size());
      double last_up = lo, last_down = lo;
      for (std::size_t i = 1; i + 1 < vals.size(); ++i) {
        if (rng.next_u64() & 1) {
          deltas.push_back(vals[i] - last_up);
          last_up = vals[i];
        } else {
          deltas.push_back(last_down - vals[i]);
          last_down = vals[i];
        }
      }
      deltas.push_back(hi - last_up);
      deltas.push_back(last_down - hi);
      return deltas;
    };

    std::vector<double> xs(static_cast<std::size_t>(n)), ys(static_cast<std::size_t>(n));
    for (double& v : xs) v = rng.uniform01();
    for (double& v : ys) v = rng.uniform01();
    std::vector<double> dx = chain_deltas(xs);
    std::vector<double> dy = chain_deltas(ys);

    // Random pairing of x displacements with y displacements.
    for (std::size_t i = dy.size(); i > 1; --i)
      std::swap(dy[i - 1], dy[rng.below(i)]);

    std::vector<Point> vecs(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) vecs[static_cast<std::size_t>(i)] = {dx[static_cast<std::size_t>(i)], dy[static_cast<std::size_t>(i)]};
    std::sort(vecs.begin(), vecs.end(),
              [](Point a, Point b) { return std::atan2(a.y, a.x) < std::atan2(b.y, b.x); });

    std::vector<Point> verts(static_cast<std::size_t>(n));
    Point cur{0.0, 0.0};
    Point min_corner{0.0, 0.0};
    for (int i = 0; i < n; ++i) {
      verts[static_cast<std::size_t>(i)] = cur;
      min_corner = {std::min(min_corner.x, cur.x), std::min(min_corner.y, cur.y)};
      cur = cur + vecs[static_cast<std::size_t>(i)];
    }
    for (Point& v : verts) v = v - min_corner;

    // Canonical start: lexicographically smallest vertex first.
    const auto lex_min = std::min_element(verts.begin(), verts.end(), [](Point a, Point b) {
      return a.x < b.x || (a.x == b.x && a.y < b.y);
    });
    std::rotate(verts.begin(), lex_min, verts.end());

    try {
      ConvexShape shape = ConvexShape::from_ccw_vertices(std::move(verts));
      if (static_cast<int>(shape.size()) == n) return shape;
    } catch (const DegenerateInput&) {
      // parallel displacement vectors collapsed a vertex; retry
    }
  }
  throw DegenerateShape("failed to generate a strictly convex polygon with the requested size");
}

Polyline random_vertex_curve(const ConvexShape& shape, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<std::size_t> order(shape.size());
  std::iota(order.begin(), order.end(), 0);
  for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[rng.below(i)]);
  Polyline line;
  line.points.reserve(order.size());
  for (std::size_t idx : order) line.points.push_back(shape.vertices()[idx]);
  return line;
}

bool curve_covers_shape(const Polyline& curve, const ConvexShape& shape, double tolerance) {
  if (curve.points.size() < 3) return false;
  try {
    const ConvexShape hull = convex_hull(curve.points);
    for (const Point& v : shape.vertices())
      if (!contains_point(hull, v, tolerance)) return false;
    return true;
  } catch (const DegenerateInput&) {
    return false;
  }
}

Polyline random_covering_curve(const ConvexShape& shape, std::uint64_t seed) {
  const double tol = kNonstrictTolFactor * std::max(1.0, shape.scale());
  for (std::uint64_t attempt = 0; attempt < 64; ++attempt) {
    Rng rng(derive_seed(seed, attempt));
    const std::uint64_t family = rng.below(3);
    Polyline curve;
    if (family == 0) {
      // boundary traversal from a random start vertex
      const std::size_t start = rng.below(shape.size());
      for (std::size_t i = 0; i <= shape.size(); ++i)
        curve.points.push_back(shape.vertex(start + i));
    } else if (family == 1) {
      curve = random_vertex_curve(shape, rng.next_u64());
    } else {
      // outward-perturbed closed tour: vertices pushed along their normal
      // cone directions, which keeps the hull over the shape in all but
      // skewed cases (checked below)
      const double amp = rng.uniform(0.0, 0.2) * shape.scale();
      const std::size_t n = shape.size();
      for (std::size_t i = 0; i <= n; ++i) {
        const Point prev = shape.vertex(i + n - 1);
        const Point cur = shape.vertex(i);
        const Point next = shape.vertex(i + 1);
        Point normal = rot90(prev - cur) + rot90(cur - next);
        const double len = norm(normal);
        if (len > 0.0) normal = (1.0 / len) * normal;
        curve.points.push_back(cur + rng.uniform(0.0, amp) * normal);
      }
      curve.points.back() = curve.points.front();
    }
    if (curve_covers_shape(curve, shape, tol)) return curve;
  }
  return boundary_polyline(shape, true);  // always covers
}

// ---------------------------------------------------------------------------
// Theorem checks

namespace {

CheckReport base_report(TheoremId id, const ConvexShape& shape, int n) {
  CheckReport report;
  report.theorem_id = id;
  report.n = n != 0 ? n : static_cast<int>(shape.size());
  report.shape_provenance =
      shape.source() ? kind_name(*shape.source()) : "polygon(n=" + std::to_string(shape.size()) + ")";
  return report;
}

void require_curve_through_vertices(const Polyline& curve, const ConvexShape& shape) {
  const double tol = kNonstrictTolFactor * std::max(1.0, shape.scale());
  for (const Point& v : shape.vertices()) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < curve.points.size() && best > tol; ++i) {
      best = std::min(best, distance(curve.points[i], v));
      if (i + 1 < curve.points.size()) {
        // distance to the segment, for curves that pass through a vertex
        // mid-segment
        const Point a = curve.points[i];
        const Point b = curve.points[i + 1];
        const Point ab = b - a;
        const double t = std::clamp(dot(v - a, ab) / std::max(dot(ab, ab), 1e-300), 0.0, 1.0);
        best = std::min(best, distance(v, a + t * ab));
      }
    }
    if (best > tol)
      throw MissingAux("curve does not pass through all vertices of the shape");
  }
}

}  // namespace

CheckReport check_theorem(TheoremId id, const ConvexShape& shape,
                          const std::optional<Polyline>& aux, int n) {
  const double scale = std::max(1.0, shape.scale());
  const double tol = kNonstrictTolFactor * scale;
  const double per = perimeter(shape);

  switch (id) {
    case TheoremId::T1_four_points: {
      CheckReport report = base_report(id, shape, n);
      const FourPointWitness w = four_point_construction(shape);
      const Point pts[4] = {w.a, w.b, w.c, w.d};
      report.lhs = shortest_path_through(pts).length;
      report.rhs = 0.5 * per;
      report.slack = report.lhs - report.rhs;
      report.tolerance_used = tol;
      report.pass = report.slack >= -tol;
      return report;
    }
    case TheoremId::T2_double_perimeter: {
      CheckReport report = base_report(id, shape, n);
      const FourPointWitness w = four_point_construction(shape);
      report.lhs = per;
      report.rhs = double_perimeter_bound(w);
      report.slack = report.rhs - report.lhs;
      report.tolerance_used = kStrictTolFactor * scale;
      report.pass = report.slack > report.tolerance_used;  // proven strict
      return report;
    }
    case TheoremId::T4_extreme_curve: {
      if (!aux) throw MissingAux("T4 needs a curve through all vertices");
      require_curve_through_vertices(*aux, shape);
      CheckReport report = base_report(id, shape, n);
      report.lhs = path_length(*aux);
      report.rhs = per - diameter(shape).length;
      report.slack = report.lhs - report.rhs;
      report.tolerance_used = tol;
      report.pass = report.slack >= -tol;
      return report;
    }
    case TheoremId::BARRIER_half: {
      if (!aux) throw MissingAux("barrier check needs a covering curve");
      if (!curve_covers_shape(*aux, shape, tol))
        throw MissingAux("curve hull does not cover the shape");
      CheckReport report = base_report(id, shape, n);
      report.lhs = path_length(*aux);
      report.rhs = 0.5 * per;
      report.slack = report.lhs - report.rhs;
      report.tolerance_used = tol;
      report.pass = report.slack >= -tol;
      return report;
    }
    case TheoremId::T5_support_selection: {
      const int normals = n > 0 ? n : 8;
      CheckReport report = base_report(id, shape, normals);
      const SupportSelection sel = support_normal_selection(shape, normals);
      report.lhs = sel.polygon_perimeter;
      report.rhs = std::cos(kPi / normals) * per;
      report.slack = report.lhs - report.rhs;
      report.tolerance_used = tol;
      report.pass = report.slack >= -tol;
      return report;
    }
    case TheoremId::BOLLOBAS: {
      const int arcs = n > 0 ? n : 4;
      CheckReport report = base_report(id, shape, arcs);
      report.lhs = perimeter(equal_arc_polygon(shape, arcs));
      report.rhs = (1.0 - 2.0 / arcs) * per;
      report.slack = report.lhs - report.rhs;
      report.tolerance_used = tol;
      report.pass = report.slack >= -tol;
      return report;
    }
    case TheoremId::ZIRAKZADEH: {
      CheckReport report = base_report(id, shape, 3);
      report.lhs = perimeter(equal_arc_polygon(shape, 3));
      report.rhs = 0.5 * per;
      report.slack = report.lhs - report.rhs;
      report.tolerance_used = tol;
      report.pass = report.slack >= -tol;
      return report;
    }
    case TheoremId::CONJECTURE: {
      if (!aux) throw MissingAux("conjecture check needs a covering curve");
      if (!curve_covers_shape(*aux, shape, tol))
        throw MissingAux("curve hull does not cover the shape");
      CheckReport report = base_report(id, shape, n);
      report.lhs = path_length(*aux);
      report.rhs = per - diameter(shape).length;
      report.slack = report.lhs - report.rhs;
      report.tolerance_used = tol;
      report.pass = report.slack >= -tol;  // reported, never asserted upstream
      return report;
    }
    case TheoremId::T3_chain_bound:
    case TheoremId::CROFTON_DOMINANCE:
      throw ConfigError("check_theorem does not dispatch this id; use the dedicated module");
  }
  throw ConfigError("unhandled theorem id");
}

// ---------------------------------------------------------------------------
// Maximin point selection

namespace {

double shortest_path_value(std::span<const Point> pts) {
  const std::size_t m = pts.size();
  if (m == 2) return distance(pts[0], pts[1]);
  if (m == 3) {
    const double d01 = distance(pts[0], pts[1]);
    const double d02 = distance(pts[0], pts[2]);
    const double d12 = distance(pts[1], pts[2]);
    return d01 + d02 + d12 - std::max({d01, d02, d12});
  }
  return shortest_path_through(pts).length;
}

}  // namespace

MaximinResult maximin_point_selection(const ConvexShape& shape, int k, int restarts,
                                      std::uint64_t seed) {
  if (k < 2 || k > 8) throw DegenerateInput("maximin supports 2 <= k <= 8");
  if (restarts < 1) throw DegenerateInput("maximin needs >= 1 restart");

  const BoundaryArc arc(shape);
  const double total = arc.total();
  const double step_floor = 1e-6 * total;

  MaximinResult best;
  best.k = k;
  best.value = -1.0;

  std::vector<double> arcs(static_cast<std::size_t>(k));
  std::vector<Point> pts(static_cast<std::size_t>(k));
  long iterations = 0;

  for (int r = 0; r < restarts; ++r) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(r)));
    for (double& s : arcs) s = rng.uniform(0.0, total);
    for (int i = 0; i < k; ++i) pts[static_cast<std::size_t>(i)] = arc.point_at(arcs[static_cast<std::size_t>(i)]);
    double value = shortest_path_value(pts);

    double step = total / 8.0;
    bool converged = false;
    while (step > step_floor) {
      bool improved = false;
      for (int i = 0; i < k; ++i) {
        const std::size_t ii = static_cast<std::size_t>(i);
        const double s0 = arcs[ii];
        for (double delta : {step, -step}) {
          pts[ii] = arc.point_at(s0 + delta);
          const double candidate = shortest_path_value(pts);
          ++iterations;
          if (candidate > value) {
            value = candidate;
            arcs[ii] = std::fmod(s0 + delta + total, total);
            improved = true;
            break;
          }
        }
        pts[ii] = arc.point_at(arcs[ii]);
      }
      if (!improved) step *= 0.5;
    }
    converged = true;

    if (value > best.value) {
      best.value = value;
      best.best_arcs = arcs;
      best.best_points = pts;
      best.converged = converged;
    }
  }
  best.iterations = iterations;
  return best;
}

MaximinResult maximin_grid_oracle(const ConvexShape& shape, int k, int resolution) {
  if (k != 2 && k != 3) throw TooManyPoints("grid oracle supports k = 2 or k = 3");
  if (resolution < 8) throw DegenerateInput("grid oracle needs resolution >= 8");

  const BoundaryArc arc(shape);
  const double total = arc.total();
  const std::size_t g = static_cast<std::size_t>(resolution);
  std::vector<Point> grid(g);
  std::vector<double> arcs(g);
  for (std::size_t i = 0; i < g; ++i) {
    arcs[i] = total * static_cast<double>(i) / static_cast<double>(g);
    grid[i] = arc.point_at(arcs[i]);
  }

  MaximinResult best;
  best.k = k;
  best.value = -1.0;
  best.converged = true;

  if (k == 2) {
    for (std::size_t i = 0; i < g; ++i)
      for (std::size_t j = i + 1; j < g; ++j) {
        const double v = distance(grid[i], grid[j]);
        ++best.iterations;
        if (v > best.value) {
          best.value = v;
          best.best_points = {grid[i], grid[j]};
          best.best_arcs = {arcs[i], arcs[j]};
        }
      }
    return best;
  }

  for (std::size_t i = 0; i < g; ++i) {
    for (std::size_t j = i + 1; j < g; ++j) {
      const double dij = distance(grid[i], grid[j]);
      for (std::size_t l = j + 1; l < g; ++l) {
        const double dil = distance(grid[i], grid[l]);
        const double djl = distance(grid[j], grid[l]);
        const double v = dij + dil + djl - std::max({dij, dil, djl});
        ++best.iterations;
        if (v > best.value) {
          best.value = v;
          best.best_points = {grid[i], grid[j], grid[l]};
          best.best_arcs = {arcs[i], arcs[j], arcs[l]};
        }
      }
    }
  }
  return best;
}

// ---------------------------------------------------------------------------
// Conjecture search

namespace {

ConvexShape conjecture_shape(Rng& rng, int family, std::string& description) {
  switch (family) {
    case 0: {  // generic random polygon
      const int n = rng.int_in(3, 64);
      const std::uint64_t s = rng.next_u64();
      description = "random_polygon(n=" + std::to_string(n) + ",seed=" + std::to_string(s) + ")";
      return random_convex_polygon(n, s);
    }
    case 1: {  // elongated rectangle
      const double L = std::exp(rng.uniform(std::log(2.0), std::log(1000.0)));
      description = "rectangle(L=" + format_double(L) + ")";
      return discretize(RectangleSpec{L, 1.0}, 8);
    }
    case 2: {  // near-degenerate triangle
      const double h = std::exp(rng.uniform(std::log(1e-4), std::log(0.5)));
      const double apex = rng.uniform(0.1, 0.9);
      description = "thin_triangle(h=" + format_double(h) + ")";
      return ConvexShape::from_ccw_vertices({{0.0, 0.0}, {1.0, 0.0}, {apex, h}});
    }
    case 3: {  // thin lens
      const double half_angle = rng.uniform(0.02, 0.5);
      const LensSpec lens{std::sin(half_angle), 1.0 - std::cos(half_angle)};
      description = "lens(half_angle=" + format_double(half_angle) + ")";
      return discretize(lens, 64);
    }
    default: {  // flat half-ellipse
      const double k = std::exp(rng.uniform(std::log(1e-3), std::log(1.0)));
      description = "half_ellipse(k=" + format_double(k) + ")";
      return discretize(HalfEllipseSpec{std::min(k, 1.0)}, 64);
    }
  }
}

std::string trial_json(const ConjectureTrial& trial, const ConvexShape& shape,
                       const Polyline& curve, double per, double diam) {
  std::ostringstream out;
  out << "{\"seed\":" << trial.seed << ",\"family\":" << trial.family
      << ",\"slack\":" << format_double(trial.slack) << ",\"perimeter\":" << format_double(per)
      << ",\"diameter\":" << format_double(diam) << ",\"shape\":\"" << trial.description
      << "\",\"vertices\":[";
  const auto& v = shape.vertices();
  for (std::size_t i = 0; i < v.size(); ++i)
    out << (i ? "," : "") << '[' << format_double(v[i].x) << ',' << format_double(v[i].y) << ']';
  out << "],\"curve\":[";
  for (std::size_t i = 0; i < curve.points.size(); ++i)
    out << (i ? "," : "") << '[' << format_double(curve.points[i].x) << ','
        << format_double(curve.points[i].y) << ']';
  out << "]}";
  return out.str();
}

}  // namespace

ConjectureSearchReport conjecture_search(long trials, std::uint64_t seed) {
  if (trials < 1) throw DegenerateInput("search needs >= 1 trial");

  ConjectureSearchReport report;
  report.trials = trials;
  report.min_slack = std::numeric_limits<double>::infinity();

  for (long t = 0; t < trials; ++t) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(t)));
    ConjectureTrial trial;
    trial.seed = derive_seed(seed, static_cast<std::uint64_t>(t));
    trial.family = static_cast<int>(rng.below(5));

    ConvexShape shape = conjecture_shape(rng, trial.family, trial.description);
    Polyline curve = random_covering_curve(shape, rng.next_u64());

    const double per = perimeter(shape);
    const double diam = diameter(shape).length;
    trial.slack = path_length(curve) - (per - diam);

    const double tol = kNonstrictTolFactor * std::max(1.0, shape.scale());
    if (trial.slack < report.min_slack) {
      report.min_slack = trial.slack;
      report.worst = trial;
    }
    if (trial.slack < -tol) {
      // candidate counterexample: re-verify coverage and slack at a
      // tightened tolerance before reporting
      if (curve_covers_shape(curve, shape, 0.01 * tol) &&
          path_length(curve) - (per - diam) < -tol) {
        report.candidates.push_back(trial_json(trial, shape, curve, per, diam));
      }
    }
  }
  return report;
}

}  // namespace curvebound
