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

#include "afe/models/naive_bayes.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace afe::models {

NaiveBayesModel::NaiveBayesModel(ClassifierSpec spec, Eigen::MatrixXd means,
                                 Eigen::MatrixXd variances, Eigen::VectorXd log_priors)
    : Model(std::move(spec), static_cast<std::size_t>(means.cols()),
            static_cast<int>(means.rows())),
      means_(std::move(means)),
      variances_(std::move(variances)),
      log_priors_(std::move(log_priors)) {
  log_offset_ = log_priors_;
  for (Eigen::Index c = 0; c < means_.rows(); ++c) {
    for (Eigen::Index f = 0; f < means_.cols(); ++f) {
      log_offset_(c) -= 0.5 * std::log(2.0 * std::numbers::pi * variances_(c, f));
    }
  }
  inv_two_var_ = (2.0 * variances_.array()).inverse().matrix();
}

Matrix NaiveBayesModel::DoPredictProba(const Matrix& x) const {
  const Eigen::Index k = means_.rows();
  Matrix out(x.rows(), k);
  std::vector<double> joint(static_cast<std::size_t>(k));
  for (Eigen::Index r = 0; r < x.rows(); ++r) {
    for (Eigen::Index c = 0; c < k; ++c) {
      double lj = log_offset_(c);
      for (Eigen::Index f = 0; f < x.cols(); ++f) {
        const double diff = x(r, f) - means_(c, f);
        lj -= diff * diff * inv_two_var_(c, f);
      }
      joint[static_cast<std::size_t>(c)] = lj;
    }
    double m = -std::numeric_limits<double>::infinity();
    for (const double v : joint) m = std::max(m, v);
    double total = 0.0;
    for (Eigen::Index c = 0; c < k; ++c) {
      out(r, c) = std::isfinite(joint[static_cast<std::size_t>(c)])
                      ? std::exp(joint[static_cast<std::size_t>(c)] - m)
                      : 0.0;
      total += out(r, c);
    }
    out.row(r) /= total;
  }
  return out;
}

TrainedModel TrainNaiveBayes(const ClassifierSpec& spec, const data::DataMatrix& d) {
  const Eigen::Index k = d.n_classes;
  const Eigen::Index p = d.features.cols();
  const auto n = static_cast<double>(d.rows());

  double max_var = 0.0;
  for (Eigen::Index f = 0; f < p; ++f) {
    const auto col = d.features.col(f);
    const double mean = col.sum() / n;
    max_var = std::max(max_var, (col.array() - mean).square().sum() / n);
  }
  double epsilon = spec.gnb.var_smoothing * max_var;
  // All columns constant: fall back to the raw smoothing amount.
  if (epsilon <= 0.0) epsilon = std::max(spec.gnb.var_smoothing, 1e-300);

  Eigen::MatrixXd means = Eigen::MatrixXd::Zero(k, p);
  Eigen::MatrixXd vars = Eigen::MatrixXd::Zero(k, p);
  Eigen::VectorXd counts = Eigen::VectorXd::Zero(k);
  for (std::size_t i = 0; i < d.rows(); ++i) {
    const Eigen::Index c = d.labels[i];
    means.row(c) += d.features.row(static_cast<Eigen::Index>(i));
    counts(c) += 1.0;
  }
  Eigen::VectorXd log_priors(k);
  for (Eigen::Index c = 0; c < k; ++c) {
    if (counts(c) > 0.0) means.row(c) /= counts(c);
    log_priors(c) = counts(c) > 0.0 ? std::log(counts(c) / n)
                                    : -std::numeric_limits<double>::infinity();
  }
  for (std::size_t i = 0; i < d.rows(); ++i) {
    const Eigen::Index c = d.labels[i];
    vars.row(c) += (d.features.row(static_cast<Eigen::Index>(i)) - means.row(c))
                       .array()
                       .square()
                       .matrix();
  }
  for (Eigen::Index c = 0; c < k; ++c) {
    if (counts(c) > 0.0) vars.row(c) /= counts(c);
  }
  vars.array() += epsilon;
  return std::make_shared<NaiveBayesModel>(spec, std::move(means), std::move(vars),
                                           std::move(log_priors));
}

}  // namespace afe::models
