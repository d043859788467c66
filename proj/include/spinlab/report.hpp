#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

namespace spinlab {

/// One named check: the unit of CLI output. pass is always residual <= tolerance.
struct CheckReport {
  std::string check_id;
  std::map<std::string, std::string> inputs;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::string notes;

  static CheckReport make(std::string id, double residual, double tolerance,
                          std::map<std::string, std::string> inputs = {},
                          std::string notes = {}) {
    CheckReport r;
    r.check_id = std::move(id);
    r.residual = residual;
    r.tolerance = tolerance;
    r.pass = residual <= tolerance;
    r.inputs = std::move(inputs);
    r.notes = std::move(notes);
    return r;
  }
};

struct SuiteConfig {
  double abs_eps = 1e-10;
  double rank_eps = 1e-8;
  int alpha_grid_size = 256;
  unsigned long long seed = 42;
  double mass = 1.0;
  double s0 = 1.4142135623730951;  // sqrt(2)
  double s3 = 1.0;
  int probe_samples = 10000;
  std::string format = "json";  // json | csv
  std::string out_path;         // empty = stdout

  double shell_residual() const { return std::abs(s0 * s0 - s3 * s3 - mass * mass); }
  bool valid(std::string* why = nullptr) const {
    if (alpha_grid_size < 2) {
      if (why) *why = "grid size must be >= 2";
      return false;
    }
    if (shell_residual() > abs_eps) {
      if (why) *why = "impulse (s0, s3) is off the mass shell";
      return false;
    }
    if (abs_eps <= 0 || rank_eps <= 0) {
      if (why) *why = "tolerances must be positive";
      return false;
    }
    return true;
  }
};

/// Decimal float with 17 significant digits; the report format pins this so
/// two runs with the same config are byte-identical.
inline std::string fmt17(double v) {
  if (v == 0.0) v = 0.0;  // collapse negative zero
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

inline std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 8);
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default: out += c;
    }
  }
  return out;
}

inline void sort_reports(std::vector<CheckReport>& reports) {
  std::sort(reports.begin(), reports.end(),
            [](const CheckReport& a, const CheckReport& b) { return a.check_id < b.check_id; });
}

/// Top-level JSON array of CheckReport objects, sorted by check_id.
inline std::string reports_to_json(std::vector<CheckReport> reports) {
  sort_reports(reports);
  std::string out = "[\n";
  for (size_t i = 0; i < reports.size(); ++i) {
    const auto& r = reports[i];
    out += "  {\"check_id\": \"" + json_escape(r.check_id) + "\", \"inputs\": {";
    size_t j = 0;
    for (const auto& [k, v] : r.inputs) {
      out += "\"" + json_escape(k) + "\": \"" + json_escape(v) + "\"";
      if (++j < r.inputs.size()) out += ", ";
    }
    out += "}, \"residual\": " + fmt17(r.residual);
    out += ", \"tolerance\": " + fmt17(r.tolerance);
    out += std::string(", \"pass\": ") + (r.pass ? "true" : "false");
    out += ", \"notes\": \"" + json_escape(r.notes) + "\"}";
    if (i + 1 < reports.size()) out += ",";
    out += "\n";
  }
  out += "]\n";
  return out;
}

inline std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += "\"";
  return out;
}

inline std::string reports_to_csv(std::vector<CheckReport> reports) {
  sort_reports(reports);
  std::string out = "check_id,residual,tolerance,pass,inputs,notes\n";
  for (const auto& r : reports) {
    std::string inputs;
    size_t j = 0;
    for (const auto& [k, v] : r.inputs) {
      inputs += k + "=" + v;
      if (++j < r.inputs.size()) inputs += ";";
    }
    out += csv_escape(r.check_id) + "," + fmt17(r.residual) + "," + fmt17(r.tolerance) + "," +
           (r.pass ? "true" : "false") + "," + csv_escape(inputs) + "," + csv_escape(r.notes) + "\n";
  }
  return out;
}

/// Numeric table with named columns, emitted as CSV or a JSON array of rows.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  std::string to_csv() const {
    std::string out;
    for (size_t i = 0; i < columns.size(); ++i) {
      out += columns[i];
      if (i + 1 < columns.size()) out += ",";
    }
    out += "\n";
    for (const auto& row : rows) {
      for (size_t i = 0; i < row.size(); ++i) {
        out += fmt17(row[i]);
        if (i + 1 < row.size()) out += ",";
      }
      out += "\n";
    }
    return out;
  }

  std::string to_json() const {
    std::string out = "[\n";
    for (size_t r = 0; r < rows.size(); ++r) {
      out += "  {";
      for (size_t i = 0; i < rows[r].size(); ++i) {
        out += "\"" + json_escape(columns[i]) + "\": " + fmt17(rows[r][i]);
        if (i + 1 < rows[r].size()) out += ", ";
      }
      out += "}";
      if (r + 1 < rows.size()) out += ",";
      out += "\n";
    }
    out += "]\n";
    return out;
  }
};

}  // namespace spinlab
