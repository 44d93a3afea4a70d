#pragma once

// Tabular output in CSV or JSON. Doubles are written with 17 significant
// digits, so parsing the text back reproduces the bits exactly. Output is a
// pure function of its inputs.

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "json.hpp"

#include "mfao/meanfield.hpp"

namespace mfao {

using Cell = std::variant<double, std::string, bool>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

enum class Format { kCsv, kJson };

Format format_from_name(std::string_view name);
std::string_view format_name(Format f);

/// Locale-independent, 17 significant digits; "nan"/"inf"/"-inf" for non-finite.
std::string format_double(double v);

/// CSV: header row then one row per record, LF endings, no metadata.
/// JSON: {"meta": meta, "columns": [...], "rows": [[...], ...]}, with
/// non-finite numbers written as null.
/// Throws ArgumentError if a row's width differs from the header.
std::string serialize(const Table& table, const nlohmann::json& meta, Format format);

/// Columns t, theta, phi, gamma, xi, p1, p2.
Table trajectory_table(const Trajectory& traj);

}  // namespace mfao
