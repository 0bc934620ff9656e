#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace wrep {

inline constexpr const char* kToolVersion = "wrep 0.1.0";

struct ReportInstance {
  std::string id;
  bool pass = true;
  std::string detail;  // counterexample data; empty when passing
};

/// One verification or data report. Serialization is deterministic for
/// identical inputs: stable ordering everywhere, and timings are kept out of
/// the payload unless explicitly requested.
struct Report {
  std::string command;  // "verify", "classes", "delta-eig"
  std::string theorem;  // theorem id for verify reports
  std::string group;
  std::string grid;
  std::vector<std::string> columns;               // data table header (optional)
  std::vector<std::vector<std::string>> rows;     // data table rows
  std::vector<ReportInstance> instances;          // checked identities
  std::optional<double> elapsed_seconds;          // never part of default output

  bool all_pass() const {
    for (const auto& i : instances)
      if (!i.pass) return false;
    return true;
  }
  size_t failed() const {
    size_t n = 0;
    for (const auto& i : instances) n += i.pass ? 0 : 1;
    return n;
  }
};

struct Document {
  std::vector<Report> reports;
  bool all_pass() const {
    for (const auto& r : reports)
      if (!r.all_pass()) return false;
    return true;
  }
};

inline std::string render_table(const Report& r, bool with_timings = false) {
  std::string out;
  out += "== " + r.command + (r.theorem.empty() ? "" : " " + r.theorem) + " ==\n";
  if (!r.group.empty()) out += "group: " + r.group + "\n";
  if (!r.grid.empty()) out += "grid: " + r.grid + "\n";
  if (!r.columns.empty()) {
    std::vector<size_t> w(r.columns.size());
    for (size_t j = 0; j < r.columns.size(); ++j) w[j] = r.columns[j].size();
    for (const auto& row : r.rows)
      for (size_t j = 0; j < row.size() && j < w.size(); ++j) w[j] = std::max(w[j], row[j].size());
    auto emit = [&](const std::vector<std::string>& row) {
      std::string line;
      for (size_t j = 0; j < row.size(); ++j) {
        line += row[j];
        if (j + 1 < row.size()) line += std::string(w[j] - row[j].size() + 2, ' ');
      }
      out += line + "\n";
    };
    emit(r.columns);
    for (const auto& row : r.rows) emit(row);
  }
  for (const auto& i : r.instances) {
    out += (i.pass ? "[ok]   " : "[FAIL] ") + i.id;
    if (!i.detail.empty()) out += "  -- " + i.detail;
    out += "\n";
  }
  if (!r.instances.empty()) {
    out += "result: " + std::string(r.all_pass() ? "PASS" : "FAIL") + " (" +
           std::to_string(r.instances.size() - r.failed()) + "/" +
           std::to_string(r.instances.size()) + ")\n";
  }
  if (with_timings && r.elapsed_seconds)
    out += "elapsed: " + std::to_string(*r.elapsed_seconds) + " s\n";
  return out;
}

inline nlohmann::json to_json(const Report& r, bool with_timings = false) {
  nlohmann::json j;
  j["command"] = r.command;
  if (!r.theorem.empty()) j["theorem"] = r.theorem;
  j["group"] = r.group;
  j["grid"] = r.grid;
  if (!r.columns.empty()) {
    j["table"]["columns"] = r.columns;
    j["table"]["rows"] = r.rows;
  }
  nlohmann::json insts = nlohmann::json::array();
  for (const auto& i : r.instances) {
    nlohmann::json ji;
    ji["id"] = i.id;
    ji["pass"] = i.pass;
    if (!i.detail.empty()) ji["detail"] = i.detail;
    insts.push_back(ji);
  }
  j["instances"] = insts;
  j["summary"] = {{"total", r.instances.size()},
                  {"failed", r.failed()},
                  {"pass", r.all_pass()}};
  if (with_timings && r.elapsed_seconds) j["elapsed_seconds"] = *r.elapsed_seconds;
  return j;
}

inline std::string render_document_table(const Document& d, bool with_timings = false) {
  std::string out = std::string(kToolVersion) + "\n";
  for (const auto& r : d.reports) out += "\n" + render_table(r, with_timings);
  out += "\noverall: " + std::string(d.all_pass() ? "PASS" : "FAIL") + "\n";
  return out;
}

inline std::string render_document_json(const Document& d, bool with_timings = false) {
  nlohmann::json j;
  j["tool"] = kToolVersion;
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : d.reports) arr.push_back(to_json(r, with_timings));
  j["reports"] = arr;
  j["pass"] = d.all_pass();
  return j.dump(2) + "\n";
}

}  // namespace wrep
