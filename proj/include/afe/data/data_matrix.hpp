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

#ifndef AFE_DATA_DATA_MATRIX_HPP_
#define AFE_DATA_DATA_MATRIX_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "afe/common/matrix.hpp"

namespace afe::data {

// Dense numeric features plus 0-based class labels. Every other module
// consumes this container.
struct DataMatrix {
  Matrix features;
  std::vector<std::string> feature_names;
  Labels labels;
  int n_classes = 0;
  // Original label tokens, indexed by class id.
  std::vector<std::string> class_names;
  std::string label_name = "label";

  std::size_t rows() const { return static_cast<std::size_t>(features.rows()); }
  std::size_t cols() const { return static_cast<std::size_t>(features.cols()); }

  // Throws DataError when any invariant is broken: shape agreement, labels in
  // [0, n_classes), finite entries.
  void Validate() const;

  DataMatrix SelectRows(std::span<const std::size_t> rows) const;
  DataMatrix SelectFeatures(const FeatureSet& columns) const;

  // Number of samples per class id.
  std::vector<std::size_t> ClassCounts() const;

  // FNV-1a digest of names, values and labels. Used for report provenance.
  std::uint64_t Digest() const;
};

}  // namespace afe::data

#endif  // AFE_DATA_DATA_MATRIX_HPP_
