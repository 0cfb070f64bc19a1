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

#ifndef AFE_MODELS_MLP_HPP_
#define AFE_MODELS_MLP_HPP_

#include <vector>

#include "afe/models/classifier.hpp"

namespace afe::models {

// One hidden ReLU layer, softmax output.
struct MlpWeights {
  Eigen::MatrixXd w1;  // hidden x inputs
  Eigen::VectorXd b1;
  Eigen::MatrixXd w2;  // classes x hidden
  Eigen::VectorXd b2;
};

// Mean cross-entropy over the rows of `x` plus 0.5 * alpha * |W|^2 / rows.
// Writes the gradient into `grad` when non-null.
double MlpLossAndGradient(const MlpWeights& weights, const Matrix& x,
                          std::span<const int> y, double alpha, MlpWeights* grad);

// Mini-batch Adam. Stops after `epochs` passes, or earlier once the epoch
// training loss fails to improve by `tol` for more than n_iter_no_change
// consecutive epochs.
class MlpModel final : public Model {
 public:
  MlpModel(ClassifierSpec spec, int class_count, MlpWeights weights,
           std::vector<double> loss_curve);

  const MlpWeights& weights() const { return weights_; }
  const std::vector<double>& loss_curve() const { return loss_curve_; }

 protected:
  Matrix DoPredictProba(const Matrix& x) const override;

 private:
  MlpWeights weights_;
  std::vector<double> loss_curve_;
};

TrainedModel TrainMlp(const ClassifierSpec& spec, const data::DataMatrix& d);

}  // namespace afe::models

#endif  // AFE_MODELS_MLP_HPP_
