/*
 * Copyright 2026 The AFE Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "afe/data/csv.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <vector>

#include "json.hpp"

#include "afe/common/errors.hpp"

namespace afe::data {
namespace {

using nlohmann::json;

std::string Trim(std::string_view s) {
  const auto is_space = [](char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\n';
  };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  if (s.size() >= 2 && s.front() == '"' && s.back() == '"') {
    s = s.substr(1, s.size() - 2);
  }
  return std::string(s);
}

std::vector<std::string> SplitLine(const std::string& line) {
  std::vector<std::string> cells;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string::npos) {
      cells.push_back(Trim(std::string_view(line).substr(start)));
      return cells;
    }
    cells.push_back(Trim(std::string_view(line).substr(start, comma - start)));
    start = comma + 1;
  }
}

std::optional<double> ParseNumber(const std::string& s) {
  double v = 0.0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (first != last && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last) return std::nullopt;
  return v;
}

std::string FormatNumber(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

ColumnRole ParseRole(const std::string& column, const json& spec) {
  ColumnRole role;
  if (spec.is_string()) {
    const auto s = spec.get<std::string>();
    if (s == "feature-numeric") {
      role.kind = ColumnRole::Kind::kNumeric;
    } else if (s == "label") {
      role.kind = ColumnRole::Kind::kLabel;
    } else if (s == "ignore") {
      role.kind = ColumnRole::Kind::kIgnore;
    } else {
      throw ConfigError("schema column '" + column + "': unknown role '" + s + "'");
    }
    return role;
  }
  if (spec.is_object() && spec.size() == 1) {
    const auto& [key, body] = *spec.items().begin();
    if (key == "feature-binary") {
      if (!body.contains("yes_token") || !body.contains("no_token")) {
        throw ConfigError("schema column '" + column +
                          "': feature-binary needs yes_token and no_token");
      }
      role.kind = ColumnRole::Kind::kBinary;
      role.yes_token = body.at("yes_token").get<std::string>();
      role.no_token = body.at("no_token").get<std::string>();
      return role;
    }
    if (key == "feature-categorical") {
      role.kind = ColumnRole::Kind::kCategorical;
      for (const auto& [token, code] : body.items()) {
        role.levels[token] = code.get<double>();
      }
      if (role.levels.empty()) {
        throw ConfigError("schema column '" + column + "': empty categorical map");
      }
      return role;
    }
  }
  throw ConfigError("schema column '" + column + "': unrecognised role " + spec.dump());
}

}  // namespace

Schema Schema::FromJsonText(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("schema is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigError("schema must be a JSON object");
  Schema schema;
  for (const auto& [column, spec] : doc.items()) {
    schema.columns[column] = ParseRole(column, spec);
  }
  schema.LabelColumn();
  return schema;
}

Schema Schema::Load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open schema file: " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return FromJsonText(ss.str());
}

std::string Schema::ToJsonText() const {
  json doc = json::object();
  for (const auto& [column, role] : columns) {
    switch (role.kind) {
      case ColumnRole::Kind::kNumeric:
        doc[column] = "feature-numeric";
        break;
      case ColumnRole::Kind::kLabel:
        doc[column] = "label";
        break;
      case ColumnRole::Kind::kIgnore:
        doc[column] = "ignore";
        break;
      case ColumnRole::Kind::kBinary:
        doc[column] = {{"feature-binary",
                        {{"yes_token", role.yes_token}, {"no_token", role.no_token}}}};
        break;
      case ColumnRole::Kind::kCategorical:
        doc[column] = {{"feature-categorical", role.levels}};
        break;
    }
  }
  return doc.dump(2) + "\n";
}

Schema Schema::ForMatrix(const DataMatrix& d) {
  Schema schema;
  for (const auto& name : d.feature_names) schema.columns[name] = ColumnRole{};
  ColumnRole label;
  label.kind = ColumnRole::Kind::kLabel;
  schema.columns[d.label_name] = label;
  return schema;
}

const std::string& Schema::LabelColumn() const {
  const std::string* found = nullptr;
  for (const auto& [column, role] : columns) {
    if (role.kind != ColumnRole::Kind::kLabel) continue;
    if (found != nullptr) throw ConfigError("schema names more than one label column");
    found = &column;
  }
  if (found == nullptr) throw ConfigError("schema names no label column");
  return *found;
}

DataMatrix LoadCsv(const std::filesystem::path& path, const Schema& schema,
                   const LoadOptions& options, LoadStats* stats) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open data file: " + path.string());

  std::string line;
  if (!std::getline(in, line)) throw DataError(path.string() + ": empty file");
  const std::vector<std::string> header = SplitLine(line);
  const std::string& label_column = schema.LabelColumn();

  std::set<std::string> seen;
  for (const auto& h : header) {
    if (!seen.insert(h).second) throw DataError("duplicate column '" + h + "'");
  }
  if (!seen.contains(label_column)) {
    throw DataError(path.string() + ": label column '" + label_column + "' absent");
  }
  for (const auto& [column, role] : schema.columns) {
    if (!seen.contains(column) && role.kind != ColumnRole::Kind::kIgnore) {
      throw DataError(path.string() + ": schema column '" + column +
                      "' absent from header");
    }
  }

  struct Column {
    std::size_t index;
    ColumnRole role;
  };
  std::vector<Column> feature_columns;
  std::optional<std::size_t> label_index;
  DataMatrix d;
  for (std::size_t i = 0; i < header.size(); ++i) {
    const auto it = schema.columns.find(header[i]);
    const ColumnRole role = it == schema.columns.end() ? ColumnRole{} : it->second;
    if (role.kind == ColumnRole::Kind::kIgnore) continue;
    if (role.kind == ColumnRole::Kind::kLabel) {
      label_index = i;
      continue;
    }
    feature_columns.push_back({i, role});
    d.feature_names.push_back(header[i]);
  }
  if (!label_index) throw DataError("label column '" + label_column + "' absent");
  d.label_name = label_column;

  std::vector<std::vector<double>> rows;
  std::vector<std::string> label_tokens;
  LoadStats local;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (Trim(line).empty()) continue;
    if (options.limit && rows.size() >= *options.limit) break;
    ++local.rows_read;
    const std::size_t data_row = local.rows_read;
    const std::vector<std::string> cells = SplitLine(line);
    if (cells.size() != header.size()) {
      throw DataError("data row " + std::to_string(data_row) + " (line " +
                      std::to_string(line_no) + "): expected " +
                      std::to_string(header.size()) + " cells, got " +
                      std::to_string(cells.size()));
    }

    bool incomplete = cells[*label_index].empty();
    for (const auto& col : feature_columns) incomplete |= cells[col.index].empty();
    if (incomplete) {
      if (options.drop_incomplete_rows) {
        ++local.rows_dropped;
        continue;
      }
      throw DataError("data row " + std::to_string(data_row) + " (line " +
                      std::to_string(line_no) + "): missing value");
    }

    std::vector<double> values;
    values.reserve(feature_columns.size());
    for (const auto& col : feature_columns) {
      const std::string& cell = cells[col.index];
      const auto where = [&] {
        return "data row " + std::to_string(data_row) + ", column '" +
               header[col.index] + "'";
      };
      switch (col.role.kind) {
        case ColumnRole::Kind::kNumeric: {
          const auto v = ParseNumber(cell);
          if (!v) throw DataError(where() + ": not numeric: '" + cell + "'");
          values.push_back(*v);
          break;
        }
        case ColumnRole::Kind::kBinary:
          if (cell == col.role.yes_token) {
            values.push_back(1.0);
          } else if (cell == col.role.no_token) {
            values.push_back(0.0);
          } else {
            throw DataError(where() + ": unmapped categorical value '" + cell + "'");
          }
          break;
        case ColumnRole::Kind::kCategorical: {
          const auto level = col.role.levels.find(cell);
          if (level == col.role.levels.end()) {
            throw DataError(where() + ": unmapped categorical value '" + cell + "'");
          }
          values.push_back(level->second);
          break;
        }
        case ColumnRole::Kind::kLabel:
        case ColumnRole::Kind::kIgnore:
          break;
      }
    }
    rows.push_back(std::move(values));
    label_tokens.push_back(cells[*label_index]);
  }
  if (rows.empty()) throw DataError(path.string() + ": no data rows");

  d.class_names = label_tokens;
  std::sort(d.class_names.begin(), d.class_names.end());
  d.class_names.erase(std::unique(d.class_names.begin(), d.class_names.end()),
                      d.class_names.end());
  d.n_classes = static_cast<int>(d.class_names.size());

  d.features.resize(static_cast<Eigen::Index>(rows.size()),
                    static_cast<Eigen::Index>(feature_columns.size()));
  d.labels.reserve(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      d.features(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = rows[r][c];
    }
    const auto id = std::lower_bound(d.class_names.begin(), d.class_names.end(),
                                     label_tokens[r]) -
                    d.class_names.begin();
    d.labels.push_back(static_cast<int>(id));
  }
  d.Validate();
  if (stats != nullptr) *stats = local;
  return d;
}

void WriteCsv(const std::filesystem::path& path, const DataMatrix& d,
              std::optional<std::size_t> limit) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw DataError("cannot write file: " + path.string());
  for (const auto& name : d.feature_names) out << name << ',';
  out << d.label_name << '\n';
  const std::size_t n = limit ? std::min(*limit, d.rows()) : d.rows();
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < d.cols(); ++c) {
      out << FormatNumber(d.features(static_cast<Eigen::Index>(r),
                                     static_cast<Eigen::Index>(c)))
          << ',';
    }
    const auto y = static_cast<std::size_t>(d.labels[r]);
    out << (y < d.class_names.size() ? d.class_names[y] : std::to_string(y)) << '\n';
  }
  if (!out) throw DataError("write failed: " + path.string());
}

}  // namespace afe::data
