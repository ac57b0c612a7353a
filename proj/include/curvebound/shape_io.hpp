#pragma once

#include <filesystem>
#include <string>

#include "curvebound/geometry.hpp"

namespace curvebound {

/// Default vertex count for realizing parametric shapes as polygons.
inline constexpr int kDefaultDiscretization = 4096;

/// Parses a shape document: {"kind": "...", "params": {...}} for parametric
/// kinds or {"kind": "polygon", "vertices": [[x, y], ...]} with the vertices
/// counterclockwise. Throws UnsupportedSpec on unknown kinds and ConfigError
/// on malformed documents.
ShapeSpec parse_shape_spec(const std::string& json_text);
ShapeSpec load_shape_spec(const std::filesystem::path& file);

std::string shape_spec_to_json(const ShapeSpec& spec);

/// Loads a shape file and realizes it as a validated polygon (parametric
/// kinds are discretized with n_vertices).
ConvexShape load_shape(const std::filesystem::path& file, int n_vertices = kDefaultDiscretization);

/// Polyline document: {"kind": "polyline", "points": [[x, y], ...]}.
Polyline parse_polyline(const std::string& json_text);
Polyline load_polyline(const std::filesystem::path& file);
std::string polyline_to_json(const Polyline& line);

}  // namespace curvebound
