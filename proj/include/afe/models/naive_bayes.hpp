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

#ifndef AFE_MODELS_NAIVE_BAYES_HPP_
#define AFE_MODELS_NAIVE_BAYES_HPP_

#include "afe/models/classifier.hpp"

namespace afe::models {

// Gaussian naive Bayes: posterior proportional to prior times the product of
// per-feature normal likelihoods. Every variance gets
// var_smoothing * (largest column variance) added.
class NaiveBayesModel final : public Model {
 public:
  NaiveBayesModel(ClassifierSpec spec, Eigen::MatrixXd means, Eigen::MatrixXd variances,
                  Eigen::VectorXd log_priors);

  const Eigen::MatrixXd& means() const { return means_; }
  const Eigen::MatrixXd& variances() const { return variances_; }

 protected:
  Matrix DoPredictProba(const Matrix& x) const override;

 private:
  Eigen::MatrixXd means_;      // class x feature
  Eigen::MatrixXd variances_;  // class x feature
  Eigen::VectorXd log_priors_;
  // log prior minus the Gaussian normalizers, per class.
  Eigen::VectorXd log_offset_;
  Eigen::MatrixXd inv_two_var_;
};

TrainedModel TrainNaiveBayes(const ClassifierSpec& spec, const data::DataMatrix& d);

}  // namespace afe::models

#endif  // AFE_MODELS_NAIVE_BAYES_HPP_
