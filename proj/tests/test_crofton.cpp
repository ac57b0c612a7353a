#include <doctest.h>

#include <cmath>

#include "curvebound/crofton.hpp"
#include "curvebound/paths.hpp"
#include "curvebound/rng.hpp"
#include "curvebound/verifier.hpp"
#include "oracles.hpp"

using namespace curvebound;

TEST_SUITE_BEGIN("crofton");

namespace {

Polyline circle_polyline(Point center, double radius, int segments) {
  Polyline line;
  for (int i = 0; i <= segments; ++i) {
    const double t = kTwoPi * i / segments;
    line.points.push_back({center.x + radius * std::cos(t), center.y + radius * std::sin(t)});
  }
  return line;
}

}  // namespace

TEST_CASE("single-line intersection counts") {
  // square centered at the origin with side 2
  const ConvexShape square = ConvexShape::from_ccw_vertices({{-1, -1}, {1, -1}, {1, 1}, {-1, 1}});
  const Polyline boundary = boundary_polyline(square, true);
  CHECK(line_intersection_count(boundary, Direction(0.0), 0.5) == 2);
  CHECK(line_intersection_count(boundary, Direction(0.0), 3.0) == 0);

  // a segment lying inside the line y = 0 counts once
  const Polyline flat{{{-1, 0}, {1, 0}}};
  CHECK(line_intersection_count(flat, Direction(kPi / 2.0), 0.0) == 1);
  // transversal crossing of the same segment
  CHECK(line_intersection_count(flat, Direction(0.0), 0.25) == 1);

  // vertex exactly on the line counts once per crossing
  const Polyline vee{{{-1, 1}, {0, 0}, {1, 1}}};
  CHECK(line_intersection_count(vee, Direction(kPi / 2.0), 0.0) == 1);
  CHECK(line_intersection_count(vee, Direction(kPi / 2.0), 0.5) == 2);

  // convex boundaries meet interior lines exactly twice
  Rng rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    const ConvexShape shape = random_convex_polygon(rng.int_in(3, 40), rng.next_u64());
    const Polyline closed = boundary_polyline(shape, true);
    Point inside{0, 0};
    for (const Point& v : shape.vertices()) inside = inside + v;
    inside = (1.0 / static_cast<double>(shape.size())) * inside;
    const Direction phi(rng.uniform(0.0, kPi));
    const double p = dot(inside, phi.unit());
    CHECK(line_intersection_count(closed, phi, p) == 2);
  }
}

TEST_CASE("crofton length recovers the circle perimeter within half a percent") {
  const Polyline circle = circle_polyline({0, 0}, 1.0, 1024);
  const CroftonGrid grid = default_crofton_grid(circle.points);
  CHECK(grid.p_max == doctest::Approx(1.05));
  const double est = crofton_length(circle, grid, true);
  const double truth = path_length(circle);
  CHECK(std::abs(est - truth) / truth < 0.005);
}

TEST_CASE("crofton length recovers a straight segment within half a percent") {
  const Polyline segment{{{-2.0, -1.0}, {1.0, 3.0}}};  // length 5
  const CroftonGrid grid = default_crofton_grid(segment.points);
  const double est = crofton_length(segment, grid);
  CHECK(std::abs(est - 5.0) / 5.0 < 0.005);
}

TEST_CASE("curve and boundary traversal estimates agree on the square") {
  const ConvexShape square = ConvexShape::from_ccw_vertices({{-1, -1}, {1, -1}, {1, 1}, {-1, 1}});
  const Polyline boundary = boundary_polyline(square, true);
  const CroftonGrid grid = default_crofton_grid(boundary.points);
  const double direct = crofton_length(boundary, grid, true);
  Polyline detour = boundary;  // traversal with an interior detour
  detour.points.insert(detour.points.begin() + 2, Point{0.0, -0.2});
  const double with_detour = crofton_length(detour, grid, true);
  CHECK(std::abs(direct - path_length(boundary)) / path_length(boundary) < 0.005);
  CHECK(with_detour >= direct - 1e-12);
}

TEST_CASE("grid refinement reduces the circle error on average") {
  Rng rng(2024);
  double err_base = 0.0, err_fine = 0.0;
  for (int trial = 0; trial < 10; ++trial) {
    const Point center{rng.uniform(-0.3, 0.3), rng.uniform(-0.3, 0.3)};
    const double rot = rng.uniform(0.0, kTwoPi);
    Polyline circle = circle_polyline({0, 0}, 1.0, 1024);
    for (Point& p : circle.points) {
      const Point q{p.x * std::cos(rot) - p.y * std::sin(rot),
                    p.x * std::sin(rot) + p.y * std::cos(rot)};
      p = center + q;
    }
    const double truth = path_length(circle);
    CroftonGrid base = default_crofton_grid(circle.points);
    CroftonGrid fine = base;
    fine.n_angles *= 2;
    fine.n_offsets *= 2;
    err_base += std::abs(crofton_length(circle, base, true) - truth) / truth;
    err_fine += std::abs(crofton_length(circle, fine, true) - truth) / truth;
  }
  CHECK(err_fine < err_base);
}

TEST_CASE("rigid motions move the estimate by less than 3x the refinement error") {
  const Polyline circle = circle_polyline({0, 0}, 1.0, 512);
  CroftonGrid grid = default_crofton_grid(circle.points);
  grid.p_max = 2.5;  // covers all placements below
  CroftonGrid doubled = grid;
  doubled.n_angles *= 2;
  doubled.n_offsets *= 2;
  const auto refinement_error = [&](const Polyline& curve) {
    return std::abs(crofton_length(curve, grid, true) - crofton_length(curve, doubled, true));
  };
  const double est = crofton_length(circle, grid, true);
  const double base_err = refinement_error(circle);

  Rng rng(77);
  for (int trial = 0; trial < 5; ++trial) {
    const Point shift{rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
    const double rot = rng.uniform(0.0, kTwoPi);
    Polyline moved = circle;
    for (Point& p : moved.points) {
      const Point q{p.x * std::cos(rot) - p.y * std::sin(rot),
                    p.x * std::sin(rot) + p.y * std::cos(rot)};
      p = shift + q;
    }
    const double moved_est = crofton_length(moved, grid, true);
    // each placement carries its own quadrature error; the drift is bounded
    // by their sum (with a floor for luckily-exact placements)
    const double budget = base_err + refinement_error(moved) + 1e-6;
    CHECK(std::abs(moved_est - est) < 3.0 * budget);
  }
}

TEST_CASE("dominance of covering curves over the boundary") {
  const ConvexShape square = ConvexShape::from_ccw_vertices({{-1, -1}, {1, -1}, {1, 1}, {-1, 1}});
  const Polyline boundary = boundary_polyline(square, true);
  const CroftonGrid grid = default_crofton_grid(boundary.points);

  SUBCASE("the boundary dominates itself everywhere") {
    const DominanceResult dom = crofton_dominance(boundary, boundary, grid);
    CHECK(dom.violations == 0);
    CHECK(dom.fraction == 1.0);
  }

  SUBCASE("an outward detour keeps dominance and adds length") {
    Polyline detour = boundary;
    detour.points.insert(detour.points.begin() + 1, Point{0.5, -1.3});
    CroftonGrid wide = grid;
    wide.p_max = 2.0;
    const DominanceResult dom = crofton_dominance(detour, boundary, wide);
    CHECK(dom.fraction >= 0.999);
    CHECK(dom.curve_length_estimate >= dom.boundary_length_estimate);
    const CheckReport report = crofton_dominance_check(detour, boundary, wide);
    CHECK(report.pass);
  }

  SUBCASE("random closed curves through all vertices dominate") {
    Rng rng(31);
    for (int trial = 0; trial < 10; ++trial) {
      const ConvexShape shape = random_convex_polygon(rng.int_in(4, 24), rng.next_u64());
      Polyline curve = random_vertex_curve(shape, rng.next_u64());
      curve.points.push_back(curve.points.front());  // close it
      const Polyline bnd = boundary_polyline(shape, true);
      const CroftonGrid g = default_crofton_grid(curve.points);
      const DominanceResult dom = crofton_dominance(curve, bnd, g);
      CHECK(dom.fraction >= 0.999);
    }
  }
}

TEST_CASE("grid validation") {
  const Polyline circle = circle_polyline({0, 0}, 1.0, 64);
  CroftonGrid bad = default_crofton_grid(circle.points);
  bad.n_angles = 4;
  CHECK_THROWS_AS(crofton_length(circle, bad), ConfigError);
  CroftonGrid short_reach = default_crofton_grid(circle.points);
  short_reach.p_max = 0.5;
  CHECK_THROWS_AS(crofton_length(circle, short_reach), ConfigError);

  // a closed convex curve far smaller than the cell size trips the guard
  const Polyline tiny = circle_polyline({0, 0}, 1e-7, 16);
  CroftonGrid coarse;
  coarse.p_max = 10.0;
  CHECK_THROWS_AS(crofton_length(tiny, coarse, true), GridTooCoarse);
}

TEST_SUITE_END();
