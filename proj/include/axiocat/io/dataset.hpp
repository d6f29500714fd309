#pragma once

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "axiocat/core/types.hpp"
#include "axiocat/io/csv.hpp"

namespace axiocat {

enum class ColumnType { real, categorical };

inline const char* to_string(ColumnType t) { return t == ColumnType::real ? "real" : "categorical"; }

struct ColumnSpec {
  std::string name;
  ColumnType type = ColumnType::real;
};

/// Sidecar: {"columns": [{"name": "x1", "type": "real"}, ...], "label": "y"}.
/// Lists every CSV column in header order, the label column included.
struct Schema {
  std::vector<ColumnSpec> columns;
  std::optional<std::string> label;
};

inline Schema parse_schema(const nlohmann::json& j) {
  if (!j.is_object()) throw DomainError("schema must be a JSON object");
  for (const auto& [key, value] : j.items())
    if (key != "columns" && key != "label") throw DomainError("schema: unknown key '" + key + "'");
  Schema s;
  if (!j.contains("columns") || !j["columns"].is_array()) throw DomainError("schema: 'columns' array required");
  for (const auto& c : j["columns"]) {
    if (!c.is_object() || !c.contains("name") || !c["name"].is_string())
      throw DomainError("schema: every column needs a string 'name'");
    ColumnSpec spec{c["name"].get<std::string>(), ColumnType::real};
    if (c.contains("type")) {
      const auto t = c["type"].get<std::string>();
      if (t == "categorical") spec.type = ColumnType::categorical;
      else if (t != "real") throw DomainError("schema: column '" + spec.name + "' has unknown type '" + t + "'");
    }
    s.columns.push_back(std::move(spec));
  }
  if (j.contains("label") && !j["label"].is_null()) s.label = j["label"].get<std::string>();
  return s;
}

inline nlohmann::json to_json(const Schema& s) {
  nlohmann::json cols = nlohmann::json::array();
  for (const auto& c : s.columns) cols.push_back({{"name", c.name}, {"type", to_string(c.type)}});
  nlohmann::json j{{"columns", cols}};
  j["label"] = s.label ? nlohmann::json(*s.label) : nlohmann::json(nullptr);
  return j;
}

/// data.csv -> data.schema.json
inline std::filesystem::path schema_path_for(const std::filesystem::path& csv) {
  auto p = csv;
  return p.replace_extension(".schema.json");
}

struct DatasetOptions {
  std::optional<std::string> label_col;  // overrides the schema's label
  bool label_is_target = false;          // read the label column as a real response
};

struct Dataset {
  std::vector<std::string> feature_names;
  std::vector<ColumnType> feature_types;
  std::vector<std::vector<std::string>> levels;  // per feature; string levels of a non-numeric categorical column
  DataMatrix X;
  std::optional<std::string> label_name;
  std::vector<std::size_t> labels;       // 0-based, empty when unlabeled
  std::vector<std::string> label_names;  // category index -> name
  std::optional<Vector> target;

  bool labeled() const { return !labels.empty(); }
  Index c() const { return static_cast<Index>(label_names.size()); }

  MembershipMatrix memberships() const {
    if (!labeled()) throw ShapeError("dataset has no label column");
    return MembershipMatrix::from_labels(labels, label_names.size());
  }

  Schema schema() const {
    Schema s;
    for (std::size_t i = 0; i < feature_names.size(); ++i) s.columns.push_back({feature_names[i], feature_types[i]});
    if (label_name) s.columns.push_back({*label_name, target ? ColumnType::real : ColumnType::categorical});
    s.label = label_name;
    return s;
  }
};

namespace detail {

// Integers 1..c are used as category numbers; anything else maps names to
// indices by first appearance.
inline void map_labels(const std::vector<std::string>& raw, Dataset& d) {
  bool numeric = true;
  std::size_t c = 0;
  for (const auto& s : raw) {
    const auto v = parse_number(s);
    if (!v || *v < 1.0 || *v != std::floor(*v) || *v > 1e6) {
      numeric = false;
      break;
    }
    c = std::max(c, static_cast<std::size_t>(*v));
  }
  if (numeric) {
    for (std::size_t i = 1; i <= c; ++i) d.label_names.push_back(std::to_string(i));
    for (const auto& s : raw) d.labels.push_back(static_cast<std::size_t>(*parse_number(s)) - 1);
    return;
  }
  for (const auto& s : raw) {
    auto it = std::find(d.label_names.begin(), d.label_names.end(), s);
    if (it == d.label_names.end()) {
      d.label_names.push_back(s);
      it = d.label_names.end() - 1;
    }
    d.labels.push_back(static_cast<std::size_t>(it - d.label_names.begin()));
  }
}

}  // namespace detail

inline Dataset parse_dataset(const CsvTable& t, const std::optional<Schema>& schema, const DatasetOptions& opts = {}) {
  if (t.rows.empty()) throw ShapeError("dataset has no rows");
  std::vector<ColumnType> types(t.header.size(), ColumnType::real);
  std::optional<std::string> label = opts.label_col;
  if (schema) {
    if (schema->columns.size() != t.header.size())
      throw ShapeError("schema lists " + std::to_string(schema->columns.size()) + " columns, csv has " +
                       std::to_string(t.header.size()));
    for (std::size_t i = 0; i < t.header.size(); ++i) {
      if (schema->columns[i].name != t.header[i])
        throw ShapeError("schema column " + std::to_string(i + 1) + " is '" + schema->columns[i].name +
                         "', csv header has '" + t.header[i] + "'");
      types[i] = schema->columns[i].type;
    }
    if (!label) label = schema->label;
  }
  std::optional<std::size_t> label_at;
  if (label) {
    const auto it = std::find(t.header.begin(), t.header.end(), *label);
    if (it == t.header.end()) throw ShapeError("label column '" + *label + "' not in csv header");
    label_at = static_cast<std::size_t>(it - t.header.begin());
  }

  Dataset d;
  d.label_name = label;
  std::vector<std::size_t> feature_cols;
  for (std::size_t j = 0; j < t.header.size(); ++j)
    if (!label_at || j != *label_at) {
      feature_cols.push_back(j);
      d.feature_names.push_back(t.header[j]);
      d.feature_types.push_back(types[j]);
    }
  if (feature_cols.empty()) throw ShapeError("dataset has no feature columns");

  const auto n = static_cast<Index>(t.rows.size());
  Matrix x(n, static_cast<Index>(feature_cols.size()));
  d.levels.resize(feature_cols.size());
  for (std::size_t f = 0; f < feature_cols.size(); ++f) {
    const std::size_t j = feature_cols[f];
    bool all_numeric = true;
    for (const auto& row : t.rows) all_numeric = all_numeric && parse_number(row[j]).has_value();
    for (Index k = 0; k < n; ++k) {
      const auto& cell = t.rows[static_cast<std::size_t>(k)][j];
      if (types[j] == ColumnType::categorical && !all_numeric) {
        auto& lv = d.levels[f];
        auto it = std::find(lv.begin(), lv.end(), cell);
        if (it == lv.end()) {
          lv.push_back(cell);
          it = lv.end() - 1;
        }
        x(k, static_cast<Index>(f)) = static_cast<double>(it - lv.begin());
      } else {
        const auto v = parse_number(cell);
        if (!v || !std::isfinite(*v))
          throw DomainError("row " + std::to_string(k + 1) + ", column '" + t.header[j] + "': '" + cell +
                            "' is not a finite number");
        x(k, static_cast<Index>(f)) = *v;
      }
    }
  }
  d.X = DataMatrix(std::move(x));

  if (label_at) {
    std::vector<std::string> raw;
    for (const auto& row : t.rows) raw.push_back(row[*label_at]);
    if (opts.label_is_target) {
      Vector y(n);
      for (Index k = 0; k < n; ++k) {
        const auto v = parse_number(raw[static_cast<std::size_t>(k)]);
        if (!v || !std::isfinite(*v))
          throw DomainError("row " + std::to_string(k + 1) + ", target '" + *label + "': '" +
                            raw[static_cast<std::size_t>(k)] + "' is not a finite number");
        y(k) = *v;
      }
      d.target = std::move(y);
    } else {
      detail::map_labels(raw, d);
    }
  }
  return d;
}

/// Reads the CSV and, if present, its schema sidecar.
inline Dataset load_dataset(const std::filesystem::path& path, const DatasetOptions& opts = {}) {
  const auto table = read_csv(path);
  std::optional<Schema> schema;
  const auto sp = schema_path_for(path);
  if (std::filesystem::exists(sp)) {
    try {
      schema = parse_schema(nlohmann::json::parse(read_text_file(sp)));
    } catch (const nlohmann::json::exception& e) {
      throw DomainError("schema '" + sp.string() + "': " + e.what());
    }
  }
  return parse_dataset(table, schema, opts);
}

/// The dataset with its feature values replaced by `x` (same shape), labels
/// and categorical level names written back as they were read.
inline CsvTable dataset_table(const Dataset& d, const Matrix& x) {
  if (x.rows() != d.X.n() || x.cols() != d.X.p()) throw ShapeError("dataset_table: shape mismatch");
  CsvTable t;
  t.header = d.feature_names;
  if (d.label_name) t.header.push_back(*d.label_name);
  for (Index k = 0; k < x.rows(); ++k) {
    std::vector<std::string> row;
    for (Index j = 0; j < x.cols(); ++j) {
      const auto& lv = d.levels[static_cast<std::size_t>(j)];
      row.push_back(lv.empty() ? format_number(x(k, j)) : lv.at(static_cast<std::size_t>(x(k, j))));
    }
    if (d.target) row.push_back(format_number((*d.target)(k)));
    else if (d.labeled()) row.push_back(d.label_names[d.labels[static_cast<std::size_t>(k)]]);
    t.rows.push_back(std::move(row));
  }
  return t;
}

}  // namespace axiocat
