#pragma once

// Tabular output shared by the CLI commands.
//
// CSV:  `# key: value` metadata lines, one header row, then data rows.
// JSON: {"meta": {...}, "rows": [{column: value, ...}, ...]}
//
// Numbers are written with 17 significant digits in both formats.

#include <cmath>
#include <cstdio>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "bicomplex/expr.hpp"

namespace bicomplex::cli {

using nlohmann::json;

enum class Format { Csv, Json, Text };

struct Table {
  /// Insertion-ordered metadata.
  std::vector<std::pair<std::string, json>> meta;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  void add_meta(std::string key, json value) { meta.emplace_back(std::move(key), std::move(value)); }
};

inline std::string number(double v) {
  if (std::isnan(v)) return "NaN";
  if (std::isinf(v)) return v > 0 ? "Infinity" : "-Infinity";
  return expr::format_number(v);
}

inline void emit_json(const json& j, std::string& out) {
  switch (j.type()) {
    case json::value_t::object: {
      out += '{';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ", ";
        first = false;
        out += json(it.key()).dump();
        out += ": ";
        emit_json(it.value(), out);
      }
      out += '}';
      return;
    }
    case json::value_t::array: {
      out += '[';
      for (std::size_t k = 0; k < j.size(); ++k) {
        if (k) out += ", ";
        emit_json(j[k], out);
      }
      out += ']';
      return;
    }
    case json::value_t::number_float: {
      const double v = j.get<double>();
      // JSON has no NaN/Infinity literals.
      out += std::isfinite(v) ? number(v) : json(number(v)).dump();
      return;
    }
    default: out += j.dump(); return;
  }
}

inline std::string meta_value_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  std::string s;
  emit_json(v, s);
  return s;
}

inline std::string to_csv(const Table& t) {
  std::string out;
  for (const auto& [k, v] : t.meta) out += "# " + k + ": " + meta_value_text(v) + "\n";
  for (std::size_t c = 0; c < t.columns.size(); ++c) {
    if (c) out += ',';
    out += t.columns[c];
  }
  out += '\n';
  for (const auto& row : t.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out += ',';
      out += number(row[c]);
    }
    out += '\n';
  }
  return out;
}

inline std::string to_json(const Table& t) {
  std::string out = "{\"meta\": {";
  for (std::size_t k = 0; k < t.meta.size(); ++k) {
    if (k) out += ", ";
    out += json(t.meta[k].first).dump() + ": ";
    emit_json(t.meta[k].second, out);
  }
  out += "},\n\"rows\": [";
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    out += r ? ",\n  {" : "\n  {";
    for (std::size_t c = 0; c < t.columns.size(); ++c) {
      if (c) out += ", ";
      out += json(t.columns[c]).dump() + ": ";
      emit_json(json(t.rows[r][c]), out);
    }
    out += '}';
  }
  out += t.rows.empty() ? "]}\n" : "\n]}\n";
  return out;
}

inline std::string render(const Table& t, Format f) { return f == Format::Json ? to_json(t) : to_csv(t); }

}  // namespace bicomplex::cli
