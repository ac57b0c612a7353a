#include "curvebound/crofton.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace curvebound {

namespace {

void validate_grid(const CroftonGrid& grid, const Polyline& curve) {
  if (grid.n_angles < 16 || grid.n_offsets < 16)
    throw ConfigError("crofton grid needs at least 16 angles and 16 offsets");
  if (!(grid.p_max > 0.0)) throw ConfigError("crofton grid needs p_max > 0");
  double reach = 0.0;
  for (const Point& p : curve.points) reach = std::max(reach, norm(p));
  if (reach > grid.p_max) throw ConfigError("crofton grid p_max does not cover the curve");
}

/// Per-angle crossing histogram over the offset bins, via a difference
/// array: each segment marks the half-open projection span it crosses.
class AngleHistogram {
 public:
  AngleHistogram(int n_offsets, double p_max)
      : n_(n_offsets), p_max_(p_max), dp_(2.0 * p_max / n_offsets), diff_(n_offsets + 1, 0) {}

  void accumulate(std::span<const Point> pts, Point u) {
    std::fill(diff_.begin(), diff_.end(), 0);
    if (pts.size() < 2) return;
    double prev = dot(pts[0], u);
    for (std::size_t i = 1; i < pts.size(); ++i) {
      const double cur = dot(pts[i], u);
      double lo = prev, hi = cur;
      if (lo > hi) std::swap(lo, hi);
      // offsets p_j = -p_max + (j + 0.5) dp; mark bins with lo < p_j <= hi
      const auto f = [&](double t) { return (t + p_max_) / dp_ - 0.5; };
      long first = static_cast<long>(std::floor(f(lo))) + 1;
      long last = static_cast<long>(std::floor(f(hi)));
      first = std::max(first, 0L);
      last = std::min(last, static_cast<long>(n_) - 1);
      if (first <= last) {
        ++diff_[static_cast<std::size_t>(first)];
        --diff_[static_cast<std::size_t>(last) + 1];
      }
      prev = cur;
    }
  }

  /// Prefix-sums the difference array into per-bin counts.
  void finalize(std::vector<int>& counts) const {
    counts.assign(static_cast<std::size_t>(n_), 0);
    int running = 0;
    for (int j = 0; j < n_; ++j) {
      running += diff_[static_cast<std::size_t>(j)];
      counts[static_cast<std::size_t>(j)] = running;
    }
  }

 private:
  int n_;
  double p_max_;
  double dp_;
  std::vector<int> diff_;
};

}  // namespace

CroftonGrid default_crofton_grid(std::span<const Point> points) {
  double reach = 0.0;
  for (const Point& p : points) reach = std::max(reach, norm(p));
  CroftonGrid grid;
  grid.p_max = 1.05 * std::max(reach, 1e-9);
  return grid;
}

int line_intersection_count(const Polyline& curve, const Direction& phi, double p) {
  validate(curve);
  const Point u = phi.unit();
  // Tokenize the point sequence into nonzero signs and zero runs. Each zero
  // run is one intersection component; each sign flip between adjacent
  // nonzero tokens is one transversal crossing.
  int count = 0;
  int last_sign = 0;
  bool in_zero_run = false;
  for (const Point& q : curve.points) {
    const double s = dot(q, u) - p;
    const int sign = s > 0.0 ? 1 : (s < 0.0 ? -1 : 0);
    if (sign == 0) {
      if (!in_zero_run) {
        ++count;
        in_zero_run = true;
      }
      last_sign = 0;
      continue;
    }
    in_zero_run = false;
    if (last_sign != 0 && sign != last_sign) ++count;
    last_sign = sign;
  }
  return count;
}

double crofton_length(const Polyline& curve, const CroftonGrid& grid, bool closed_convex_guard) {
  validate(curve);
  validate_grid(grid, curve);

  const double dphi = kPi / grid.n_angles;
  const double dp = 2.0 * grid.p_max / grid.n_offsets;
  AngleHistogram hist(grid.n_offsets, grid.p_max);
  std::vector<int> counts;

  std::int64_t total = 0;
  int max_count = 0;
  for (int i = 0; i < grid.n_angles; ++i) {
    const double phi = (i + 0.5) * dphi;
    const Point u{std::cos(phi), std::sin(phi)};
    hist.accumulate(curve.points, u);
    hist.finalize(counts);
    for (int c : counts) {
      total += c;
      max_count = std::max(max_count, c);
    }
  }
  if (closed_convex_guard && max_count < 2)
    throw GridTooCoarse("no grid line crosses the closed curve twice");
  return 0.5 * dphi * dp * static_cast<double>(total);
}

DominanceResult crofton_dominance(const Polyline& curve, const Polyline& boundary,
                                  const CroftonGrid& grid) {
  validate(curve);
  validate(boundary);
  validate_grid(grid, curve);
  validate_grid(grid, boundary);
  if (curve.points.size() < 2 || !(distance(curve.points.front(), curve.points.back()) <=
                                   1e-9 * std::max(1.0, grid.p_max)))
    throw ConfigError("dominance check needs a closed curve (first point repeated at the end)");

  const double dphi = kPi / grid.n_angles;
  const double dp = 2.0 * grid.p_max / grid.n_offsets;
  AngleHistogram curve_hist(grid.n_offsets, grid.p_max);
  AngleHistogram boundary_hist(grid.n_offsets, grid.p_max);
  std::vector<int> curve_counts, boundary_counts;

  DominanceResult result;
  std::int64_t curve_total = 0, boundary_total = 0;
  for (int i = 0; i < grid.n_angles; ++i) {
    const double phi = (i + 0.5) * dphi;
    const Point u{std::cos(phi), std::sin(phi)};
    curve_hist.accumulate(curve.points, u);
    curve_hist.finalize(curve_counts);
    boundary_hist.accumulate(boundary.points, u);
    boundary_hist.finalize(boundary_counts);
    for (int j = 0; j < grid.n_offsets; ++j) {
      const std::size_t jj = static_cast<std::size_t>(j);
      curve_total += curve_counts[jj];
      boundary_total += boundary_counts[jj];
      if (curve_counts[jj] < boundary_counts[jj]) ++result.violations;
    }
  }
  result.cells = static_cast<std::uint64_t>(grid.n_angles) * static_cast<std::uint64_t>(grid.n_offsets);
  result.fraction = 1.0 - static_cast<double>(result.violations) / static_cast<double>(result.cells);
  result.curve_length_estimate = 0.5 * dphi * dp * static_cast<double>(curve_total);
  result.boundary_length_estimate = 0.5 * dphi * dp * static_cast<double>(boundary_total);
  return result;
}

CheckReport crofton_dominance_check(const Polyline& curve, const Polyline& boundary,
                                    const CroftonGrid& grid, double required_fraction) {
  const DominanceResult dom = crofton_dominance(curve, boundary, grid);
  CheckReport report;
  report.theorem_id = TheoremId::CROFTON_DOMINANCE;
  report.lhs = dom.fraction;
  report.rhs = required_fraction;
  report.slack = dom.fraction - required_fraction;
  report.tolerance_used = 0.0;
  report.pass = report.slack >= 0.0;
  report.n = grid.n_angles;
  report.shape_provenance = "crofton_grid";
  return report;
}

}  // namespace curvebound
