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

#include "afe/data/data_matrix.hpp"

#include <bit>
#include <cmath>
#include <string>

#include "afe/common/errors.hpp"

namespace afe::data {
namespace {

class Fnv1a {
 public:
  void Add(const void* bytes, std::size_t n) {
    const auto* p = static_cast<const unsigned char*>(bytes);
    for (std::size_t i = 0; i < n; ++i) {
      h_ ^= p[i];
      h_ *= 0x100000001b3ULL;
    }
  }
  void Add(const std::string& s) {
    Add(s.data(), s.size());
    const char sep = '\x1f';
    Add(&sep, 1);
  }
  std::uint64_t value() const { return h_; }

 private:
  std::uint64_t h_ = 0xcbf29ce484222325ULL;
};

}  // namespace

void DataMatrix::Validate() const {
  if (static_cast<std::size_t>(features.rows()) != labels.size()) {
    throw DataError("feature rows (" + std::to_string(features.rows()) +
                    ") != label count (" + std::to_string(labels.size()) + ")");
  }
  if (static_cast<std::size_t>(features.cols()) != feature_names.size()) {
    throw DataError("feature columns (" + std::to_string(features.cols()) +
                    ") != feature name count (" +
                    std::to_string(feature_names.size()) + ")");
  }
  if (n_classes <= 0) throw DataError("n_classes must be positive");
  if (!class_names.empty() &&
      class_names.size() != static_cast<std::size_t>(n_classes)) {
    throw DataError("class_names size does not match n_classes");
  }
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] < 0 || labels[i] >= n_classes) {
      throw DataError("label out of range at row " + std::to_string(i));
    }
  }
  if (!features.allFinite()) throw DataError("non-finite feature value");
}

DataMatrix DataMatrix::SelectRows(std::span<const std::size_t> rows) const {
  DataMatrix out;
  out.features = afe::SelectRows(features, rows);
  out.feature_names = feature_names;
  out.labels.reserve(rows.size());
  for (const std::size_t r : rows) out.labels.push_back(labels.at(r));
  out.n_classes = n_classes;
  out.class_names = class_names;
  out.label_name = label_name;
  return out;
}

DataMatrix DataMatrix::SelectFeatures(const FeatureSet& columns) const {
  DataMatrix out;
  out.features = SelectColumns(features, columns);
  for (const std::size_t c : columns) out.feature_names.push_back(feature_names.at(c));
  out.labels = labels;
  out.n_classes = n_classes;
  out.class_names = class_names;
  out.label_name = label_name;
  return out;
}

std::vector<std::size_t> DataMatrix::ClassCounts() const {
  std::vector<std::size_t> counts(static_cast<std::size_t>(n_classes), 0);
  for (const int y : labels) ++counts.at(static_cast<std::size_t>(y));
  return counts;
}

std::uint64_t DataMatrix::Digest() const {
  Fnv1a h;
  for (const auto& name : feature_names) h.Add(name);
  h.Add(label_name);
  for (const auto& name : class_names) h.Add(name);
  for (Eigen::Index r = 0; r < features.rows(); ++r) {
    for (Eigen::Index c = 0; c < features.cols(); ++c) {
      const auto bits = std::bit_cast<std::uint64_t>(features(r, c));
      h.Add(&bits, sizeof bits);
    }
  }
  for (const int y : labels) h.Add(&y, sizeof y);
  return h.value();
}

}  // namespace afe::data
