#include <doctest.h>

#include <cmath>

#include "curvebound/paths.hpp"
#include "curvebound/rng.hpp"
#include "curvebound/verifier.hpp"
#include "oracles.hpp"

using namespace curvebound;

TEST_SUITE_BEGIN("verifier");

TEST_CASE("random convex polygons are valid, sized and deterministic") {
  CHECK(random_convex_polygon(3, 5).size() == 3);
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const int n = 3 + static_cast<int>(mix64(seed) % 62);
    const ConvexShape shape = random_convex_polygon(n, seed);
    CHECK(static_cast<int>(shape.size()) == n);
    CHECK(area(shape) > 0.0);
    // re-validation keeps every vertex
    const ConvexShape revalidated = ConvexShape::from_ccw_vertices(shape.vertices());
    CHECK(revalidated.size() == shape.size());
  }
  const ConvexShape a = random_convex_polygon(50, 123);
  const ConvexShape b = random_convex_polygon(50, 123);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a.vertices()[i] == b.vertices()[i]);
}

TEST_CASE("covering curves cover") {
  Rng rng(9);
  for (int trial = 0; trial < 60; ++trial) {
    const ConvexShape shape = random_convex_polygon(rng.int_in(3, 48), rng.next_u64());
    const Polyline curve = random_covering_curve(shape, rng.next_u64());
    CHECK(curve_covers_shape(curve, shape, 1e-9 * std::max(1.0, shape.scale())));
  }

  // the two deterministic families
  const ConvexShape square = ConvexShape::from_ccw_vertices({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  const Polyline traversal = boundary_polyline(square, true);
  CHECK(curve_covers_shape(traversal, square, 1e-9));
  const Polyline ham = shortest_path_through(square.vertices()).polyline;
  CHECK(curve_covers_shape(ham, square, 1e-9));
}

TEST_CASE("check_theorem on the disk") {
  const ConvexShape disk = discretize(EllipseSpec{1.0, 1.0}, 4096);
  const CheckReport t1 = check_theorem(TheoremId::T1_four_points, disk);
  CHECK(t1.pass);
  CHECK(t1.lhs == doctest::Approx(3.0 * std::sqrt(2.0)).epsilon(1e-4));
  CHECK(t1.rhs == doctest::Approx(kPi).epsilon(1e-5));

  const CheckReport t2 = check_theorem(TheoremId::T2_double_perimeter, disk);
  CHECK(t2.pass);
  CHECK(t2.slack == doctest::Approx(8.0 - kTwoPi).epsilon(1e-4));
}

TEST_CASE("check_theorem T4 and barrier on the square") {
  const ConvexShape square = ConvexShape::from_ccw_vertices({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  const Polyline three_sides{{{0, 1}, {0, 0}, {1, 0}, {1, 1}}};
  const CheckReport t4 = check_theorem(TheoremId::T4_extreme_curve, square, three_sides);
  CHECK(t4.pass);
  CHECK(t4.lhs == doctest::Approx(3.0).epsilon(1e-15));
  CHECK(t4.rhs == doctest::Approx(4.0 - std::sqrt(2.0)).epsilon(1e-14));

  const CheckReport barrier = check_theorem(TheoremId::BARRIER_half, square, three_sides);
  CHECK(barrier.pass);
  CHECK(barrier.rhs == doctest::Approx(2.0).epsilon(1e-15));

  CHECK_THROWS_AS(check_theorem(TheoremId::T4_extreme_curve, square), MissingAux);
  const Polyline partial{{{0, 0}, {1, 0}}};
  CHECK_THROWS_AS(check_theorem(TheoremId::T4_extreme_curve, square, partial), MissingAux);
  const Polyline small{{{0.4, 0.4}, {0.6, 0.4}, {0.5, 0.6}}};
  CHECK_THROWS_AS(check_theorem(TheoremId::BARRIER_half, square, small), MissingAux);
}

TEST_CASE("corpus spot run across all theorems") {
  Rng rng(2025);
  for (int trial = 0; trial < 50; ++trial) {
    const std::uint64_t seed = rng.next_u64();
    const ConvexShape shape = random_convex_polygon(rng.int_in(3, 64), seed);
    CHECK(check_theorem(TheoremId::T1_four_points, shape).pass);
    CHECK(check_theorem(TheoremId::T2_double_perimeter, shape).pass);
    CHECK(check_theorem(TheoremId::T5_support_selection, shape, std::nullopt, 7).pass);
    CHECK(check_theorem(TheoremId::BOLLOBAS, shape, std::nullopt, 6).pass);
    CHECK(check_theorem(TheoremId::ZIRAKZADEH, shape).pass);
    const Polyline vertex_curve = random_vertex_curve(shape, seed);
    CHECK(check_theorem(TheoremId::T4_extreme_curve, shape, vertex_curve).pass);
    const Polyline covering = random_covering_curve(shape, seed);
    CHECK(check_theorem(TheoremId::BARRIER_half, shape, covering).pass);
  }
}

TEST_CASE("maximin on the disk finds an antipodal pair") {
  const ConvexShape disk = discretize(EllipseSpec{1.0, 1.0}, 1024);
  const MaximinResult two = maximin_point_selection(disk, 2, 8, 77);
  CHECK(two.value == doctest::Approx(diameter(disk).length).epsilon(1e-4));
  CHECK(two.converged);

  const MaximinResult oracle = maximin_grid_oracle(disk, 2, 256);
  CHECK(oracle.value == doctest::Approx(2.0).epsilon(1e-3));
}

TEST_CASE("maximin on the rectangle stays below the comb bound") {
  const ConvexShape rect = discretize(RectangleSpec{100.0, 1.0}, 8);
  const MaximinResult four = maximin_point_selection(rect, 4, 12, 5);
  CHECK(four.value <= 104.0 + 1e-9);
  CHECK(four.value / 101.0 <= 104.0 / 101.0 + 1e-12);
  // monotone in k within optimizer tolerance
  const MaximinResult five = maximin_point_selection(rect, 5, 12, 5);
  CHECK(five.value >= four.value - 1e-6 * perimeter(rect));
}

TEST_CASE("maximin grid oracle rejects unsupported sizes") {
  const ConvexShape square = ConvexShape::from_ccw_vertices({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  CHECK_THROWS_AS(maximin_grid_oracle(square, 4, 64), TooManyPoints);
  CHECK_THROWS_AS(maximin_point_selection(square, 1, 4, 1), DegenerateInput);
  CHECK_THROWS_AS(maximin_point_selection(square, 9, 4, 1), DegenerateInput);
}

TEST_CASE("conjecture search reports slack and never flags proven families") {
  const ConjectureSearchReport report = conjecture_search(2000, 99);
  CHECK(report.trials == 2000);
  // slack can touch zero exactly (triangle vertex paths realize per - diam);
  // anything below -1e-9 would be a candidate
  CHECK(report.min_slack >= -1e-9);
  CHECK(report.candidates.empty());

  // the boundary traversal has slack exactly diam K
  const ConvexShape square = ConvexShape::from_ccw_vertices({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  const Polyline traversal = boundary_polyline(square, true);
  const CheckReport conj = check_theorem(TheoremId::CONJECTURE, square, traversal);
  CHECK(conj.slack == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));

  // the shortest vertex path on the square: slack = 3 - (4 - sqrt(2))
  const Polyline ham = shortest_path_through(square.vertices()).polyline;
  const CheckReport conj2 = check_theorem(TheoremId::CONJECTURE, square, ham);
  CHECK(conj2.slack == doctest::Approx(3.0 - (4.0 - std::sqrt(2.0))).epsilon(1e-13));
}

TEST_CASE("determinism of derived streams") {
  const ConjectureSearchReport a = conjecture_search(500, 4242);
  const ConjectureSearchReport b = conjecture_search(500, 4242);
  CHECK(a.min_slack == b.min_slack);
  CHECK(a.worst.seed == b.worst.seed);
  CHECK(a.worst.description == b.worst.description);
}

TEST_SUITE_END();
