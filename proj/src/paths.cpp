#include "curvebound/paths.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace curvebound {

double path_length(const Polyline& line) {
  validate(line);
  double len = 0.0;
  for (std::size_t i = 1; i < line.points.size(); ++i)
    len += distance(line.points[i - 1], line.points[i]);
  return len;
}

PathResult shortest_path_through(std::span<const Point> points, int max_n) {
  if (points.empty()) throw DegenerateInput("need at least one point");
  const int cap = std::min(max_n, kMaxExactPathPoints);
  if (static_cast<int>(points.size()) > cap)
    throw TooManyPoints("exact path search is capped at " + std::to_string(cap) + " points");
  for (const Point& p : points)
    if (!is_finite(p)) throw DegenerateInput("non-finite point");

  const std::size_t m = points.size();
  PathResult result;
  if (m == 1) {
    result.order = {0};
    result.polyline.points = {points[0]};
    return result;
  }

  std::vector<double> dist(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) dist[i * m + j] = distance(points[i], points[j]);

  std::vector<std::size_t> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::size_t> best_perm;
  double best = std::numeric_limits<double>::infinity();
  do {
    if (perm.front() > perm.back()) continue;  // a path and its reverse are the same
    double len = 0.0;
    for (std::size_t i = 1; i < m; ++i) {
      len += dist[perm[i - 1] * m + perm[i]];
      if (len >= best) break;
    }
    if (len < best) {
      best = len;
      best_perm = perm;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  result.order = std::move(best_perm);
  result.length = best;
  result.polyline.points.reserve(m);
  for (std::size_t idx : result.order) result.polyline.points.push_back(points[idx]);
  return result;
}

std::pair<double, double> triangle_angle_ratio_check(Point a, Point apex, Point b) {
  const Point va = a - apex;
  const Point vb = b - apex;
  const double la = norm(va);
  const double lb = norm(vb);
  if (la == 0.0 || lb == 0.0) throw DegenerateTriangle("apex coincides with a base point");
  const double cr = cross(va, vb);
  if (std::abs(cr) <= 1e-12 * la * lb) throw DegenerateTriangle("points are collinear");
  const double phi = std::atan2(std::abs(cr), dot(va, vb));  // in (0, pi)
  const double ratio = distance(a, b) / (la + lb);
  return {ratio, std::sin(0.5 * phi)};
}

}  // namespace curvebound
