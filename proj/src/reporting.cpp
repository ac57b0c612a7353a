#include "curvebound/reporting.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>

#include "curvebound/errors.hpp"

namespace curvebound {

std::string_view to_string(TheoremId id) {
  switch (id) {
    case TheoremId::T1_four_points: return "T1";
    case TheoremId::T2_double_perimeter: return "T2";
    case TheoremId::T3_chain_bound: return "T3";
    case TheoremId::T4_extreme_curve: return "T4";
    case TheoremId::T5_support_selection: return "T5";
    case TheoremId::BARRIER_half: return "BARRIER";
    case TheoremId::BOLLOBAS: return "BOLLOBAS";
    case TheoremId::ZIRAKZADEH: return "ZIRAKZADEH";
    case TheoremId::CONJECTURE: return "CONJECTURE";
    case TheoremId::CROFTON_DOMINANCE: return "CROFTON_DOMINANCE";
  }
  return "UNKNOWN";
}

TheoremId theorem_from_string(std::string_view name) {
  for (TheoremId id :
       {TheoremId::T1_four_points, TheoremId::T2_double_perimeter, TheoremId::T3_chain_bound,
        TheoremId::T4_extreme_curve, TheoremId::T5_support_selection, TheoremId::BARRIER_half,
        TheoremId::BOLLOBAS, TheoremId::ZIRAKZADEH, TheoremId::CONJECTURE,
        TheoremId::CROFTON_DOMINANCE}) {
    if (to_string(id) == name) return id;
  }
  throw ConfigError("unknown theorem id: " + std::string(name));
}

std::string format_double(double value) {
  // %.17g round-trips every double; trim to the shortest representation
  // that still round-trips for readable, byte-stable reports.
  for (int precision = 1; precision <= 17; ++precision) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.*g", precision, value);
    if (std::strtod(buf, nullptr) == value) return buf;
  }
  return "nan";
}

std::string check_report_csv_header() { return "theorem_id,seed,n,lhs,rhs,slack,pass"; }

std::string to_csv_row(const CheckReport& r) {
  std::ostringstream row;
  row << to_string(r.theorem_id) << ',' << r.seed << ',' << r.n << ',' << format_double(r.lhs)
      << ',' << format_double(r.rhs) << ',' << format_double(r.slack) << ','
      << (r.pass ? "1" : "0");
  return row.str();
}

void write_file_atomic(const std::filesystem::path& file, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path dir = file.has_parent_path() ? file.parent_path() : fs::path(".");
  fs::create_directories(dir);
  fs::path tmp = dir / (file.filename().string() + ".tmp" + std::to_string(std::random_device{}()));
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw ConfigError("cannot write file: " + tmp.string());
    out << content;
    out.flush();
    if (!out) throw ConfigError("write failed: " + tmp.string());
  }
  fs::rename(tmp, file);
}

void write_csv_atomic(const std::filesystem::path& file, const std::vector<CheckReport>& reports) {
  std::ostringstream out;
  out << check_report_csv_header() << '\n';
  for (const CheckReport& r : reports) out << to_csv_row(r) << '\n';
  write_file_atomic(file, out.str());
}

}  // namespace curvebound
