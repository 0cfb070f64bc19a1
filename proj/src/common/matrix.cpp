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

#include "afe/common/matrix.hpp"

#include "afe/common/errors.hpp"

namespace afe {

Matrix SelectColumns(const Matrix& m, const FeatureSet& columns) {
  Matrix out(m.rows(), static_cast<Eigen::Index>(columns.size()));
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c] >= static_cast<std::size_t>(m.cols())) {
      throw ConfigError("column index " + std::to_string(columns[c]) +
                        " out of range");
    }
    out.col(static_cast<Eigen::Index>(c)) =
        m.col(static_cast<Eigen::Index>(columns[c]));
  }
  return out;
}

Matrix SelectRows(const Matrix& m, std::span<const std::size_t> rows) {
  Matrix out(static_cast<Eigen::Index>(rows.size()), m.cols());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    out.row(static_cast<Eigen::Index>(r)) =
        m.row(static_cast<Eigen::Index>(rows[r]));
  }
  return out;
}

}  // namespace afe
