#include "curvebound/shape_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace curvebound {

namespace {

using nlohmann::json;

json parse(const std::string& text) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded()) throw ConfigError("malformed JSON document");
  return doc;
}

std::string read_file(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw ConfigError("cannot open file: " + file.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

double number(const json& j, const char* field) {
  if (!j.contains(field) || !j[field].is_number())
    throw ConfigError(std::string("missing numeric field: ") + field);
  return j[field].get<double>();
}

std::vector<Point> point_list(const json& j) {
  std::vector<Point> pts;
  if (!j.is_array()) throw ConfigError("expected an array of [x, y] pairs");
  for (const auto& item : j) {
    if (!item.is_array() || item.size() != 2 || !item[0].is_number() || !item[1].is_number())
      throw ConfigError("expected an array of [x, y] pairs");
    pts.push_back({item[0].get<double>(), item[1].get<double>()});
  }
  return pts;
}

}  // namespace

ShapeSpec parse_shape_spec(const std::string& json_text) {
  const json doc = parse(json_text);
  if (!doc.contains("kind") || !doc["kind"].is_string())
    throw ConfigError("shape document needs a string field 'kind'");
  const std::string kind = doc["kind"].get<std::string>();

  ShapeSpec spec;
  if (kind == "polygon") {
    if (!doc.contains("vertices")) throw ConfigError("polygon shape needs 'vertices'");
    spec = PolygonSpec{point_list(doc["vertices"])};
  } else {
    const json params = doc.contains("params") ? doc["params"] : json::object();
    if (kind == "ellipse")
      spec = EllipseSpec{number(params, "a_semi"), number(params, "b_semi")};
    else if (kind == "half_ellipse")
      spec = HalfEllipseSpec{number(params, "k")};
    else if (kind == "lens")
      spec = LensSpec{number(params, "chord_half"), number(params, "sagitta")};
    else if (kind == "rectangle")
      spec = RectangleSpec{number(params, "width"), number(params, "height")};
    else if (kind == "deltoid_pair_member")
      spec = DeltoidSpec{static_cast<int>(number(params, "index"))};
    else
      throw UnsupportedSpec("unknown shape kind: " + kind);
  }
  validate(spec);
  return spec;
}

ShapeSpec load_shape_spec(const std::filesystem::path& file) {
  return parse_shape_spec(read_file(file));
}

std::string shape_spec_to_json(const ShapeSpec& spec) {
  json doc;
  doc["kind"] = kind_name(spec);
  struct Visitor {
    json& doc;
    void operator()(const PolygonSpec& s) const {
      json verts = json::array();
      for (const Point& p : s.vertices) verts.push_back({p.x, p.y});
      doc["vertices"] = std::move(verts);
    }
    void operator()(const EllipseSpec& s) const {
      doc["params"] = {{"a_semi", s.a_semi}, {"b_semi", s.b_semi}};
    }
    void operator()(const HalfEllipseSpec& s) const { doc["params"] = {{"k", s.k}}; }
    void operator()(const LensSpec& s) const {
      doc["params"] = {{"chord_half", s.chord_half}, {"sagitta", s.sagitta}};
    }
    void operator()(const RectangleSpec& s) const {
      doc["params"] = {{"width", s.width}, {"height", s.height}};
    }
    void operator()(const DeltoidSpec& s) const { doc["params"] = {{"index", s.index}}; }
  };
  std::visit(Visitor{doc}, spec);
  return doc.dump(2);
}

ConvexShape load_shape(const std::filesystem::path& file, int n_vertices) {
  return discretize(load_shape_spec(file), n_vertices);
}

Polyline parse_polyline(const std::string& json_text) {
  const json doc = parse(json_text);
  if (!doc.contains("points")) throw ConfigError("polyline document needs 'points'");
  Polyline line{point_list(doc["points"])};
  validate(line);
  return line;
}

Polyline load_polyline(const std::filesystem::path& file) {
  return parse_polyline(read_file(file));
}

std::string polyline_to_json(const Polyline& line) {
  json doc;
  doc["kind"] = "polyline";
  json pts = json::array();
  for (const Point& p : line.points) pts.push_back({p.x, p.y});
  doc["points"] = std::move(pts);
  return doc.dump(2);
}

}  // namespace curvebound
