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

#ifndef AFE_COMMON_MATRIX_HPP_
#define AFE_COMMON_MATRIX_HPP_

#include <Eigen/Dense>
#include <cstddef>
#include <span>
#include <vector>

namespace afe {

// Row-major so a sample is a contiguous span.
using Matrix =
    Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using Vector = Eigen::VectorXd;

using Labels = std::vector<int>;
using FeatureSet = std::vector<std::size_t>;

inline std::span<const double> RowSpan(const Matrix& m, Eigen::Index row) {
  return {m.data() + row * m.cols(), static_cast<std::size_t>(m.cols())};
}

// Copy of `m` restricted to `columns`, in the given order.
Matrix SelectColumns(const Matrix& m, const FeatureSet& columns);

// Copy of `m` restricted to `rows`, in the given order.
Matrix SelectRows(const Matrix& m, std::span<const std::size_t> rows);

}  // namespace afe

#endif  // AFE_COMMON_MATRIX_HPP_
