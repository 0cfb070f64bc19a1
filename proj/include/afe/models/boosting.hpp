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

#ifndef AFE_MODELS_BOOSTING_HPP_
#define AFE_MODELS_BOOSTING_HPP_

#include <vector>

#include "afe/models/classifier.hpp"
#include "afe/models/tree.hpp"

namespace afe::models {

// Gradient boosting on log loss with shallow regression trees. Binary
// problems fit one tree per stage on the logit; K > 2 classes fit K trees per
// stage on the softmax scores. Leaves take a single Newton step.
class BoostingModel final : public Model {
 public:
  BoostingModel(ClassifierSpec spec, std::size_t feature_count, int class_count,
                Eigen::VectorXd init, std::vector<Tree> trees,
                std::vector<double> train_loss_history);

  // Trees per stage: 1 for binary, class_count otherwise.
  std::size_t width() const { return static_cast<std::size_t>(init_.size()); }
  std::size_t stage_count() const { return trees_.size() / width(); }
  const std::vector<Tree>& trees() const { return trees_; }
  // Mean training log loss after each stage.
  const std::vector<double>& train_loss_history() const { return train_loss_history_; }

  // Raw additive scores, rows x width().
  Eigen::MatrixXd DecisionFunction(const Matrix& x) const;
  // Sigmoid (binary) or softmax of raw scores.
  Matrix ProbaFromScores(Eigen::MatrixXd scores) const;
  const Eigen::VectorXd& init() const { return init_; }

 protected:
  Matrix DoPredictProba(const Matrix& x) const override;

 private:
  Eigen::VectorXd init_;
  std::vector<Tree> trees_;
  std::vector<double> train_loss_history_;
};

TrainedModel TrainBoosting(const ClassifierSpec& spec, const data::DataMatrix& d);

}  // namespace afe::models

#endif  // AFE_MODELS_BOOSTING_HPP_
