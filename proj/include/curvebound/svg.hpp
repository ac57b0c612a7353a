#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "curvebound/geometry.hpp"

namespace curvebound {

/// Minimal SVG figure writer. Figures are textual and diffable; the viewBox
/// is computed from the accumulated geometry with a margin, and the y-axis
/// is flipped to mathematical orientation.
class SvgCanvas {
 public:
  void add_polygon(std::span<const Point> vertices, const std::string& stroke,
                   const std::string& fill = "none", double width_fraction = 0.004);
  void add_polyline(std::span<const Point> points, const std::string& stroke,
                    double width_fraction = 0.004, bool dashed = false);
  void add_dot(Point center, const std::string& fill, double radius_fraction = 0.01);
  void add_label(Point anchor, const std::string& text, double size_fraction = 0.04);

  std::string render() const;
  void save(const std::filesystem::path& file) const;

 private:
  struct Element {
    std::string kind;  // polygon | polyline | dot | label
    std::vector<Point> pts;
    std::string stroke;
    std::string fill;
    std::string text;
    double fraction = 0.0;
    bool dashed = false;
  };
  void grow_bbox(std::span<const Point> pts);

  std::vector<Element> elements_;
  double min_x_ = 0.0, min_y_ = 0.0, max_x_ = 0.0, max_y_ = 0.0;
  bool has_bbox_ = false;
};

}  // namespace curvebound
