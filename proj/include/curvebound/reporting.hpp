#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace curvebound {

enum class TheoremId {
  T1_four_points,
  T2_double_perimeter,
  T3_chain_bound,
  T4_extreme_curve,
  T5_support_selection,
  BARRIER_half,
  BOLLOBAS,
  ZIRAKZADEH,
  CONJECTURE,
  CROFTON_DOMINANCE,
};

std::string_view to_string(TheoremId id);
TheoremId theorem_from_string(std::string_view name);  // throws ConfigError

/// Verdict record for one inequality check. For ">=" claims pass means
/// slack >= -tolerance_used; for strict "<" claims pass means
/// slack > tolerance_used.
struct CheckReport {
  TheoremId theorem_id = TheoremId::T1_four_points;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
  bool pass = false;
  std::uint64_t seed = 0;          // shape generation seed, 0 for file/spec shapes
  int n = 0;                       // vertex count or construction parameter
  std::string shape_provenance;    // seed description or spec name
  double tolerance_used = 0.0;
};

/// Fixed CSV columns: theorem_id,seed,n,lhs,rhs,slack,pass
std::string check_report_csv_header();
std::string to_csv_row(const CheckReport& report);

/// Shortest-width decimal round-trip formatting, so identical doubles always
/// produce identical bytes.
std::string format_double(double value);

/// Writes content to a temporary file in the target directory and renames it
/// into place, so interrupted runs never leave partial reports.
void write_file_atomic(const std::filesystem::path& file, const std::string& content);

void write_csv_atomic(const std::filesystem::path& file, const std::vector<CheckReport>& reports);

}  // namespace curvebound
