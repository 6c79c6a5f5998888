// Run configuration and machine-readable check reports. Reports are
// deterministic per seed: stable field ordering, fixed float formatting, no
// timestamps.
#pragma once

#include <cstdio>
#include <fstream>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "lightcone/mass_shell.hpp"

namespace lightcone {

constexpr const char* kReportSchemaVersion = "1";

struct RunConfig {
  std::uint64_t seed = 7;
  RadialSpec radial;
  AngularSpec angular;
  int sweep_samples = 1000;
  int field_grid = 32;
  double field_spacing = 0.25;
  std::string out_dir = ".";
  std::string format = "json";
  std::map<std::string, double> tolerances;

  double tol(const std::string& name, double fallback) const {
    const auto it = tolerances.find(name);
    return it == tolerances.end() ? fallback : it->second;
  }

  static RunConfig from_json(const nlohmann::json& j) {
    RunConfig c;
    c.seed = j.value("seed", c.seed);
    if (j.contains("grid")) {
      const auto& g = j["grid"];
      c.radial.nodes = g.value("radial_nodes", c.radial.nodes);
      c.radial.r_min = g.value("r_min", c.radial.r_min);
      c.radial.r_max = g.value("r_max", c.radial.r_max);
      c.angular.nodes = g.value("angular_nodes", c.angular.nodes);
    }
    c.sweep_samples = j.value("sweep_samples", c.sweep_samples);
    c.field_grid = j.value("field_grid", c.field_grid);
    c.field_spacing = j.value("field_spacing", c.field_spacing);
    c.out_dir = j.value("out_dir", c.out_dir);
    c.format = j.value("format", c.format);
    if (j.contains("tolerances"))
      for (const auto& [k, v] : j["tolerances"].items()) c.tolerances[k] = v.get<double>();
    for (const auto& [k, v] : c.tolerances)
      if (!(v > 0.0)) throw std::invalid_argument("tolerance '" + k + "' must be positive");
    return c;
  }

  static RunConfig from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read config file " + path);
    nlohmann::json j;
    in >> j;
    return from_json(j);
  }
};

struct CheckRecord {
  std::string id;
  std::string anchor;  // which identity the check exercises
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct Report {
  std::string suite;
  std::vector<CheckRecord> records;

  void add(const std::string& id, const std::string& anchor, double residual,
           double tolerance) {
    records.push_back({id, anchor, residual, tolerance, residual <= tolerance});
  }
  bool all_passed() const {
    for (const auto& r : records)
      if (!r.pass) return false;
    return true;
  }
};

inline std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

inline nlohmann::ordered_json report_to_json(const Report& rep) {
  nlohmann::ordered_json j;
  j["schema_version"] = kReportSchemaVersion;
  j["suite"] = rep.suite;
  j["passed"] = rep.all_passed();
  j["records"] = nlohmann::ordered_json::array();
  for (const auto& r : rep.records) {
    nlohmann::ordered_json rec;
    rec["id"] = r.id;
    rec["anchor"] = r.anchor;
    rec["residual"] = format_double(r.residual);
    rec["tolerance"] = format_double(r.tolerance);
    rec["pass"] = r.pass;
    j["records"].push_back(rec);
  }
  return j;
}

inline Report report_from_json(const nlohmann::json& j) {
  Report rep;
  rep.suite = j.at("suite").get<std::string>();
  for (const auto& rec : j.at("records")) {
    CheckRecord r;
    r.id = rec.at("id").get<std::string>();
    r.anchor = rec.at("anchor").get<std::string>();
    r.residual = std::stod(rec.at("residual").get<std::string>());
    r.tolerance = std::stod(rec.at("tolerance").get<std::string>());
    r.pass = rec.at("pass").get<bool>();
    rep.records.push_back(r);
  }
  return rep;
}

inline std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

// One header row, one row per record.
inline std::string report_to_csv(const Report& rep) {
  std::string out = "schema,suite,id,anchor,residual,tolerance,pass\n";
  for (const auto& r : rep.records) {
    out += kReportSchemaVersion;
    out += ',' + csv_escape(rep.suite) + ',' + csv_escape(r.id) + ',' + csv_escape(r.anchor) +
           ',' + format_double(r.residual) + ',' + format_double(r.tolerance) + ',' +
           (r.pass ? "true" : "false") + '\n';
  }
  return out;
}

inline void emit_report(const Report& rep, const std::string& format,
                        const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write report to " + path);
  if (format == "json")
    out << report_to_json(rep).dump(2) << '\n';
  else if (format == "csv")
    out << report_to_csv(rep);
  else
    throw std::invalid_argument("unknown report format '" + format + "'");
}

}  // namespace lightcone
