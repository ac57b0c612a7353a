#include "curvebound/svg.hpp"

#include <algorithm>
#include <sstream>

#include "curvebound/reporting.hpp"

namespace curvebound {

void SvgCanvas::grow_bbox(std::span<const Point> pts) {
  for (const Point& p : pts) {
    if (!has_bbox_) {
      min_x_ = max_x_ = p.x;
      min_y_ = max_y_ = p.y;
      has_bbox_ = true;
      continue;
    }
    min_x_ = std::min(min_x_, p.x);
    max_x_ = std::max(max_x_, p.x);
    min_y_ = std::min(min_y_, p.y);
    max_y_ = std::max(max_y_, p.y);
  }
}

void SvgCanvas::add_polygon(std::span<const Point> vertices, const std::string& stroke,
                            const std::string& fill, double width_fraction) {
  Element e;
  e.kind = "polygon";
  e.pts.assign(vertices.begin(), vertices.end());
  e.stroke = stroke;
  e.fill = fill;
  e.fraction = width_fraction;
  grow_bbox(e.pts);
  elements_.push_back(std::move(e));
}

void SvgCanvas::add_polyline(std::span<const Point> points, const std::string& stroke,
                             double width_fraction, bool dashed) {
  Element e;
  e.kind = "polyline";
  e.pts.assign(points.begin(), points.end());
  e.stroke = stroke;
  e.fill = "none";
  e.fraction = width_fraction;
  e.dashed = dashed;
  grow_bbox(e.pts);
  elements_.push_back(std::move(e));
}

void SvgCanvas::add_dot(Point center, const std::string& fill, double radius_fraction) {
  Element e;
  e.kind = "dot";
  e.pts = {center};
  e.fill = fill;
  e.fraction = radius_fraction;
  grow_bbox(e.pts);
  elements_.push_back(std::move(e));
}

void SvgCanvas::add_label(Point anchor, const std::string& text, double size_fraction) {
  Element e;
  e.kind = "label";
  e.pts = {anchor};
  e.text = text;
  e.fraction = size_fraction;
  grow_bbox(e.pts);
  elements_.push_back(std::move(e));
}

std::string SvgCanvas::render() const {
  const double span = has_bbox_ ? std::max(max_x_ - min_x_, max_y_ - min_y_) : 1.0;
  const double margin = 0.06 * std::max(span, 1e-12);
  const double x0 = min_x_ - margin;
  const double y0 = min_y_ - margin;
  const double w = (max_x_ - min_x_) + 2.0 * margin;
  const double h = (max_y_ - min_y_) + 2.0 * margin;
  const double unit = std::max(span, 1e-12);

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\""
      << format_double(800.0 * h / std::max(w, 1e-12)) << "\" viewBox=\"" << format_double(x0)
      << ' ' << format_double(-y0 - h) << ' ' << format_double(w) << ' ' << format_double(h)
      << "\">\n";
  // flip to mathematical y-up orientation
  out << "<g transform=\"scale(1,-1)\">\n";
  for (const Element& e : elements_) {
    if (e.kind == "polygon" || e.kind == "polyline") {
      out << '<' << e.kind << " points=\"";
      for (std::size_t i = 0; i < e.pts.size(); ++i)
        out << (i ? " " : "") << format_double(e.pts[i].x) << ',' << format_double(e.pts[i].y);
      out << "\" fill=\"" << e.fill << "\" stroke=\"" << e.stroke << "\" stroke-width=\""
          << format_double(e.fraction * unit) << '"';
      if (e.dashed)
        out << " stroke-dasharray=\"" << format_double(0.02 * unit) << ' '
            << format_double(0.012 * unit) << '"';
      out << "/>\n";
    } else if (e.kind == "dot") {
      out << "<circle cx=\"" << format_double(e.pts[0].x) << "\" cy=\""
          << format_double(e.pts[0].y) << "\" r=\"" << format_double(e.fraction * unit)
          << "\" fill=\"" << e.fill << "\"/>\n";
    } else {
      out << "<text x=\"" << format_double(e.pts[0].x) << "\" y=\""
          << format_double(-e.pts[0].y) << "\" font-size=\"" << format_double(e.fraction * unit)
          << "\" transform=\"scale(1,-1)\">" << e.text << "</text>\n";
    }
  }
  out << "</g>\n</svg>\n";
  return out.str();
}

void SvgCanvas::save(const std::filesystem::path& file) const { write_file_atomic(file, render()); }

}  // namespace curvebound
