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

#ifndef AFE_MODELS_LOGISTIC_HPP_
#define AFE_MODELS_LOGISTIC_HPP_

#include "afe/models/classifier.hpp"

namespace afe::models {

// Binary: P(y=1|x) = 1 / (1 + exp(-(w.x + b))). With more than two classes
// the model is multinomial (one weight row per class, softmax output).
//
// Training minimises 0.5 * l2 * |W|^2 + sum_i cross_entropy_i (bias
// unpenalised) by full-batch gradient descent with Armijo backtracking.
class LogisticModel final : public Model {
 public:
  // `weights` has one row for binary models, class_count rows otherwise.
  LogisticModel(ClassifierSpec spec, int class_count, Eigen::MatrixXd weights,
                Eigen::VectorXd bias);

  static TrainedModel FromParameters(Eigen::MatrixXd weights, Eigen::VectorXd bias,
                                     int class_count);

  const Eigen::MatrixXd& weights() const { return weights_; }
  const Eigen::VectorXd& bias() const { return bias_; }
  int iterations() const { return iterations_; }

 protected:
  Matrix DoPredictProba(const Matrix& x) const override;

 private:
  Eigen::MatrixXd weights_;
  Eigen::VectorXd bias_;
  int iterations_ = 0;

  friend TrainedModel TrainLogistic(const ClassifierSpec&, const data::DataMatrix&);
};

TrainedModel TrainLogistic(const ClassifierSpec& spec, const data::DataMatrix& d);

}  // namespace afe::models

#endif  // AFE_MODELS_LOGISTIC_HPP_
