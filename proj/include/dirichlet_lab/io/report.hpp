#pragma once

// Report envelope and CSV tables.

#include <string>
#include <vector>

#include "dirichlet_lab/io/json.hpp"

namespace dirichlet_lab::io {

inline constexpr const char* kSchemaName = "dirichlet-lab/report";
inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kToolVersion = "0.1.0";

inline Json make_report(const std::string& command, Json config, Json payload) {
  return {{"schema", kSchemaName},
          {"schema_version", kSchemaVersion},
          {"tool_version", kToolVersion},
          {"command", command},
          {"config", std::move(config)},
          {"payload", std::move(payload)}};
}

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  void add(std::vector<std::string> row) { rows.push_back(std::move(row)); }
};

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline std::string to_csv(const Table& t) {
  std::string out;
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) out += (i ? "," : "") + csv_field(cells[i]);
    out += "\n";
  };
  line(t.columns);
  for (const auto& r : t.rows) line(r);
  return out;
}

// A string cell from a JSON scalar.
inline std::string cell(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_null()) return "";
  return j.dump();
}

}  // namespace dirichlet_lab::io
