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

#ifndef AFE_MODELS_FOREST_HPP_
#define AFE_MODELS_FOREST_HPP_

#include <vector>

#include "afe/models/classifier.hpp"
#include "afe/models/tree.hpp"

namespace afe::models {

// Bagged classification trees with per-split feature sampling. Class
// probabilities are vote fractions; each tree votes for the argmax of its
// leaf distribution. Tree t draws from the stream (seed, "rf_tree", t).
class ForestModel final : public Model, public TreeEnsembleView {
 public:
  ForestModel(ClassifierSpec spec, std::size_t feature_count, int class_count,
              std::vector<Tree> trees);

  std::span<const Tree> trees() const override { return trees_; }
  Aggregation aggregation() const override { return Aggregation::kMajorityVote; }

 protected:
  Matrix DoPredictProba(const Matrix& x) const override;

 private:
  std::vector<Tree> trees_;
  // Precomputed vote of every leaf (-1 for internal nodes).
  std::vector<std::vector<int>> votes_;
};

TrainedModel TrainForest(const ClassifierSpec& spec, const data::DataMatrix& d);

}  // namespace afe::models

#endif  // AFE_MODELS_FOREST_HPP_
