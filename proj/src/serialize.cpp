#include "mfao/serialize.hpp"

#include <charconv>
#include <cmath>
#include <string>

#include "mfao/errors.hpp"

namespace mfao {

namespace {

void append_csv_cell(std::string& out, const Cell& cell) {
  if (const auto* d = std::get_if<double>(&cell)) {
    out += format_double(*d);
  } else if (const auto* b = std::get_if<bool>(&cell)) {
    out += *b ? "true" : "false";
  } else {
    const std::string& s = std::get<std::string>(cell);
    if (s.find_first_of(",\"\n\r") == std::string::npos) {
      out += s;
      return;
    }
    out += '"';
    for (char c : s) {
      if (c == '"') out += '"';
      out += c;
    }
    out += '"';
  }
}

void append_json_cell(std::string& out, const Cell& cell) {
  if (const auto* d = std::get_if<double>(&cell)) {
    out += std::isfinite(*d) ? format_double(*d) : "null";
  } else if (const auto* b = std::get_if<bool>(&cell)) {
    out += *b ? "true" : "false";
  } else {
    out += nlohmann::json(std::get<std::string>(cell)).dump();
  }
}

void check_widths(const Table& table) {
  for (const auto& row : table.rows) {
    if (row.size() != table.columns.size()) {
      throw ArgumentError("row width " + std::to_string(row.size()) + " does not match " +
                          std::to_string(table.columns.size()) + " columns");
    }
  }
}

}  // namespace

Format format_from_name(std::string_view name) {
  if (name == "csv") return Format::kCsv;
  if (name == "json") return Format::kJson;
  throw ArgumentError("unknown output format '" + std::string(name) + "'");
}

std::string_view format_name(Format f) { return f == Format::kCsv ? "csv" : "json"; }

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

std::string serialize(const Table& table, const nlohmann::json& meta, Format format) {
  check_widths(table);
  std::string out;
  if (format == Format::kCsv) {
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
      if (c) out += ',';
      append_csv_cell(out, table.columns[c]);
    }
    out += '\n';
    for (const auto& row : table.rows) {
      for (std::size_t c = 0; c < row.size(); ++c) {
        if (c) out += ',';
        append_csv_cell(out, row[c]);
      }
      out += '\n';
    }
    return out;
  }

  out += "{\"meta\":";
  out += meta.is_null() ? "{}" : meta.dump();
  out += ",\"columns\":";
  out += nlohmann::json(table.columns).dump();
  out += ",\"rows\":[";
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    if (r) out += ',';
    out += '[';
    for (std::size_t c = 0; c < table.rows[r].size(); ++c) {
      if (c) out += ',';
      append_json_cell(out, table.rows[r][c]);
    }
    out += ']';
  }
  out += "]}\n";
  return out;
}

Table trajectory_table(const Trajectory& traj) {
  Table t;
  t.columns = {"t", "theta", "phi", "gamma", "xi", "p1", "p2"};
  t.rows.reserve(traj.times.size());
  for (std::size_t k = 0; k < traj.times.size(); ++k) {
    const TrajectorySample& s = traj.samples[k];
    t.rows.push_back({traj.times[k], s.angles.theta, s.angles.phi, s.angles.gamma, s.angles.xi,
                      s.occupations.p1, s.occupations.p2});
  }
  return t;
}

}  // namespace mfao
