#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "curvebound/reporting.hpp"
#include "curvebound/shape_io.hpp"
#include "curvebound/svg.hpp"

using namespace curvebound;

TEST_SUITE_BEGIN("io");

TEST_CASE("shape spec JSON round trip") {
  const ShapeSpec ellipse = EllipseSpec{2.0, 0.5};
  const ShapeSpec back = parse_shape_spec(shape_spec_to_json(ellipse));
  CHECK(std::get<EllipseSpec>(back).a_semi == 2.0);
  CHECK(std::get<EllipseSpec>(back).b_semi == 0.5);

  const ShapeSpec poly = PolygonSpec{{{0, 0}, {1, 0}, {0.25, 0.75}}};
  const ShapeSpec poly_back = parse_shape_spec(shape_spec_to_json(poly));
  CHECK(std::get<PolygonSpec>(poly_back).vertices.size() == 3);

  for (const char* text : {
           "{\"kind\": \"moebius\"}",
           "{\"params\": {}}",
           "not json",
           "{\"kind\": \"ellipse\", \"params\": {\"a_semi\": 1.0}}",
           "{\"kind\": \"half_ellipse\", \"params\": {\"k\": 2.0}}",
       }) {
    CHECK_THROWS_AS(parse_shape_spec(text), Error);
  }
}

TEST_CASE("shape file loading validates invariants") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "curvebound_io_test";
  fs::create_directories(dir);

  const fs::path good = dir / "disk.json";
  write_file_atomic(good, "{\"kind\": \"ellipse\", \"params\": {\"a_semi\": 1, \"b_semi\": 1}}");
  const ConvexShape disk = load_shape(good, 256);
  CHECK(disk.size() == 256);

  const fs::path clockwise = dir / "cw.json";
  write_file_atomic(clockwise,
                    "{\"kind\": \"polygon\", \"vertices\": [[0,0],[0,1],[1,1],[1,0]]}");
  CHECK_THROWS_AS(load_shape(clockwise), DegenerateInput);

  CHECK_THROWS_AS(load_shape(dir / "missing.json"), ConfigError);

  const Polyline line{{{0, 0}, {1.5, 2.5}}};
  const fs::path curve = dir / "curve.json";
  write_file_atomic(curve, polyline_to_json(line));
  const Polyline back = load_polyline(curve);
  REQUIRE(back.points.size() == 2);
  CHECK(back.points[1] == Point{1.5, 2.5});
}

TEST_CASE("check report CSV rows are stable") {
  CheckReport report;
  report.theorem_id = TheoremId::T2_double_perimeter;
  report.seed = 7;
  report.n = 32;
  report.lhs = 4.0;
  report.rhs = 2.0 * std::sqrt(10001.0) + 2.0;
  report.slack = report.rhs - report.lhs;
  report.pass = true;
  CHECK(to_csv_row(report) ==
        "T2,7,32,4," + format_double(report.rhs) + "," + format_double(report.slack) + ",1");
  CHECK(check_report_csv_header() == "theorem_id,seed,n,lhs,rhs,slack,pass");

  // shortest round-trip formatting
  CHECK(format_double(0.5) == "0.5");
  CHECK(format_double(1.0 / 3.0) == "0.3333333333333333");
  CHECK(format_double(101.0) == "101");
  const double tricky = 0.1 + 0.2;
  CHECK(std::strtod(format_double(tricky).c_str(), nullptr) == tricky);

  CHECK(to_string(TheoremId::BARRIER_half) == "BARRIER");
  CHECK(theorem_from_string("ZIRAKZADEH") == TheoremId::ZIRAKZADEH);
  CHECK_THROWS_AS(theorem_from_string("T99"), ConfigError);
}

TEST_CASE("atomic CSV write leaves no temp files") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "curvebound_io_test";
  fs::create_directories(dir);
  const fs::path csv = dir / "report.csv";

  std::vector<CheckReport> rows(2);
  rows[0].theorem_id = TheoremId::T1_four_points;
  rows[1].theorem_id = TheoremId::BOLLOBAS;
  rows[1].pass = true;
  write_csv_atomic(csv, rows);

  std::ifstream in(csv);
  std::string header;
  std::getline(in, header);
  CHECK(header == check_report_csv_header());
  int data_rows = 0;
  for (std::string line; std::getline(in, line);) ++data_rows;
  CHECK(data_rows == 2);

  for (const auto& entry : fs::directory_iterator(dir))
    CHECK(entry.path().extension() != ".tmp");
}

TEST_CASE("svg rendering embeds the geometry") {
  SvgCanvas canvas;
  const std::vector<Point> tri = {{0, 0}, {2, 0}, {1, 1}};
  canvas.add_polygon(tri, "black");
  canvas.add_polyline(std::vector<Point>{{0, 0}, {1, 1}}, "crimson", 0.004, true);
  canvas.add_dot({1, 1}, "navy");
  canvas.add_label({0.1, 0.1}, "a");
  const std::string svg = canvas.render();
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.find("<polygon") != std::string::npos);
  CHECK(svg.find("stroke-dasharray") != std::string::npos);
  CHECK(svg.find("<circle") != std::string::npos);
  CHECK(svg.find(">a</text>") != std::string::npos);
  CHECK(svg.find("viewBox=") != std::string::npos);
}

TEST_SUITE_END();
