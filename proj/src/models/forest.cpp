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

#include "afe/models/forest.hpp"

#include <cmath>
#include <numeric>
#include <optional>

#include "afe/common/parallel.hpp"
#include "afe/common/rng.hpp"

namespace afe::models {

ForestModel::ForestModel(ClassifierSpec spec, std::size_t feature_count, int class_count,
                         std::vector<Tree> trees)
    : Model(std::move(spec), feature_count, class_count), trees_(std::move(trees)) {
  votes_.reserve(trees_.size());
  for (const Tree& t : trees_) {
    std::vector<int> v(t.nodes().size(), -1);
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (t.IsLeaf(i)) v[i] = ArgMax(t.value(i));
    }
    votes_.push_back(std::move(v));
  }
}

Matrix ForestModel::DoPredictProba(const Matrix& x) const {
  Matrix out = Matrix::Zero(x.rows(), class_count());
  const double share = 1.0 / static_cast<double>(trees_.size());
  for (Eigen::Index r = 0; r < x.rows(); ++r) {
    const auto row = RowSpan(x, r);
    for (std::size_t t = 0; t < trees_.size(); ++t) {
      out(r, votes_[t][trees_[t].Leaf(row)]) += 1.0;
    }
    out.row(r) *= share;
  }
  return out;
}

TrainedModel TrainForest(const ClassifierSpec& spec, const data::DataMatrix& d) {
  const std::size_t n = d.rows();
  const std::size_t p = d.cols();
  ClassificationTreeOptions options;
  options.criterion = spec.rf.criterion;
  options.max_depth = spec.rf.max_depth;
  options.min_samples_split = spec.rf.min_samples_split;
  options.max_features =
      spec.rf.max_features > 0
          ? static_cast<std::size_t>(spec.rf.max_features)
          : static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(p))));

  const auto n_trees = static_cast<std::size_t>(spec.rf.n_trees);
  std::vector<std::optional<Tree>> grown(n_trees);
  ParallelFor(n_trees, [&](std::size_t t) {
    Rng rng(spec.seed, "rf_tree", t);
    std::vector<std::size_t> rows(n);
    if (spec.rf.bootstrap) {
      for (auto& r : rows) r = static_cast<std::size_t>(rng.UniformInt(n));
    } else {
      std::iota(rows.begin(), rows.end(), 0);
    }
    grown[t] = BuildClassificationTree(d.features, d.labels, d.n_classes, std::move(rows),
                                       options, &rng);
  });

  std::vector<Tree> trees;
  trees.reserve(n_trees);
  for (auto& t : grown) trees.push_back(std::move(*t));
  return std::make_shared<ForestModel>(spec, p, d.n_classes, std::move(trees));
}

}  // namespace afe::models
