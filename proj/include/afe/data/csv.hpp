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

#ifndef AFE_DATA_CSV_HPP_
#define AFE_DATA_CSV_HPP_

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <string>

#include "afe/data/data_matrix.hpp"

namespace afe::data {

struct ColumnRole {
  enum class Kind { kNumeric, kBinary, kCategorical, kLabel, kIgnore };

  Kind kind = Kind::kNumeric;
  // kBinary: yes_token -> 1, no_token -> 0.
  std::string yes_token;
  std::string no_token;
  // kCategorical: token -> numeric code.
  std::map<std::string, double> levels;
};

// Column name -> role. Columns of the CSV that the schema does not mention are
// read as numeric features.
//
// JSON form:
//   {
//     "AGE": "feature-numeric",
//     "SMOKING": {"feature-binary": {"yes_token": "2", "no_token": "1"}},
//     "ChestPainType": {"feature-categorical": {"ASY": 0, "NAP": 1}},
//     "id": "ignore",
//     "LUNG_CANCER": "label"
//   }
struct Schema {
  std::map<std::string, ColumnRole> columns;

  static Schema FromJsonText(const std::string& text);
  static Schema Load(const std::filesystem::path& path);
  std::string ToJsonText() const;

  // All-numeric schema for `d` with its label column; what export writes.
  static Schema ForMatrix(const DataMatrix& d);

  const std::string& LabelColumn() const;
};

struct LoadOptions {
  // Skip rows with an empty cell instead of failing. Skipped rows are counted
  // in LoadStats.
  bool drop_incomplete_rows = false;
  std::optional<std::size_t> limit;
};

struct LoadStats {
  std::size_t rows_read = 0;
  std::size_t rows_dropped = 0;
};

// Reads a comma-separated file with a header row. Labels become dense ids in
// lexicographic order of their tokens. Cells and header names are trimmed.
DataMatrix LoadCsv(const std::filesystem::path& path, const Schema& schema,
                   const LoadOptions& options = {}, LoadStats* stats = nullptr);

// Writes the encoded matrix (features at full precision, label as its original
// token). LoadCsv with Schema::ForMatrix reproduces the matrix exactly.
void WriteCsv(const std::filesystem::path& path, const DataMatrix& d,
              std::optional<std::size_t> limit = std::nullopt);

}  // namespace afe::data

#endif  // AFE_DATA_CSV_HPP_
