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

#include "afe/models/boosting.hpp"

#include <cmath>
#include <numeric>

namespace afe::models {
namespace {

double Sigmoid(double z) {
  if (z >= 0.0) return 1.0 / (1.0 + std::exp(-z));
  const double e = std::exp(z);
  return e / (1.0 + e);
}

double Softplus(double z) { return std::max(z, 0.0) + std::log1p(std::exp(-std::abs(z))); }

// Softmax of each row, in place.
void SoftmaxRows(Eigen::MatrixXd& z) {
  for (Eigen::Index r = 0; r < z.rows(); ++r) {
    const double m = z.row(r).maxCoeff();
    z.row(r) = (z.row(r).array() - m).exp();
    z.row(r) /= z.row(r).sum();
  }
}

double MeanLogLoss(const Eigen::MatrixXd& f, std::span<const int> y) {
  double total = 0.0;
  if (f.cols() == 1) {
    for (Eigen::Index i = 0; i < f.rows(); ++i) {
      total += Softplus(f(i, 0)) - (y[static_cast<std::size_t>(i)] == 1 ? f(i, 0) : 0.0);
    }
  } else {
    for (Eigen::Index i = 0; i < f.rows(); ++i) {
      const double m = f.row(i).maxCoeff();
      const double lse = m + std::log((f.row(i).array() - m).exp().sum());
      total += lse - f(i, y[static_cast<std::size_t>(i)]);
    }
  }
  return total / static_cast<double>(f.rows());
}

// Leaf value with a zero-denominator guard.
double NewtonStep(double num, double den) {
  return std::abs(den) < 1e-150 ? 0.0 : num / den;
}

}  // namespace

BoostingModel::BoostingModel(ClassifierSpec spec, std::size_t feature_count, int class_count,
                             Eigen::VectorXd init, std::vector<Tree> trees,
                             std::vector<double> train_loss_history)
    : Model(std::move(spec), feature_count, class_count),
      init_(std::move(init)),
      trees_(std::move(trees)),
      train_loss_history_(std::move(train_loss_history)) {}

Eigen::MatrixXd BoostingModel::DecisionFunction(const Matrix& x) const {
  const std::size_t w = width();
  Eigen::MatrixXd f(x.rows(), static_cast<Eigen::Index>(w));
  for (Eigen::Index r = 0; r < x.rows(); ++r) {
    f.row(r) = init_.transpose();
    const auto row = RowSpan(x, r);
    for (std::size_t t = 0; t < trees_.size(); ++t) {
      f(r, static_cast<Eigen::Index>(t % w)) += trees_[t].value(trees_[t].Leaf(row))[0];
    }
  }
  return f;
}

Matrix BoostingModel::DoPredictProba(const Matrix& x) const {
  return ProbaFromScores(DecisionFunction(x));
}

Matrix BoostingModel::ProbaFromScores(Eigen::MatrixXd f) const {
  Matrix out(f.rows(), class_count());
  if (width() == 1) {
    for (Eigen::Index r = 0; r < f.rows(); ++r) {
      const double p = Sigmoid(f(r, 0));
      out(r, 0) = 1.0 - p;
      out(r, 1) = p;
    }
  } else {
    SoftmaxRows(f);
    out = f;
  }
  return out;
}

TrainedModel TrainBoosting(const ClassifierSpec& spec, const data::DataMatrix& d) {
  const BoostingParams& prm = spec.gb;
  const std::size_t n = d.rows();
  const int k = d.n_classes;
  const bool binary = k == 2;
  const auto w = static_cast<Eigen::Index>(binary ? 1 : k);
  const std::span<const int> y(d.labels);

  const auto counts = d.ClassCounts();
  Eigen::VectorXd init(w);
  if (binary) {
    const double pos = static_cast<double>(counts[1]) / static_cast<double>(n);
    init(0) = std::log(pos / (1.0 - pos));
  } else {
    for (Eigen::Index c = 0; c < w; ++c) {
      const double prior = static_cast<double>(counts[static_cast<std::size_t>(c)]) /
                           static_cast<double>(n);
      init(c) = std::log(std::max(prior, 1e-300));
    }
  }

  Eigen::MatrixXd f(static_cast<Eigen::Index>(n), w);
  f.rowwise() = init.transpose();

  std::vector<std::size_t> all(n);
  std::iota(all.begin(), all.end(), 0);
  std::vector<double> residual(n);
  std::vector<double> prob(n);
  std::vector<Tree> trees;
  trees.reserve(static_cast<std::size_t>(prm.n_stages) * static_cast<std::size_t>(w));
  std::vector<double> history;
  history.reserve(static_cast<std::size_t>(prm.n_stages));

  const double kfactor = binary ? 1.0 : static_cast<double>(k - 1) / static_cast<double>(k);
  for (int stage = 0; stage < prm.n_stages; ++stage) {
    Eigen::MatrixXd p = f;
    if (binary) {
      p = p.unaryExpr([](double z) { return Sigmoid(z); });
    } else {
      SoftmaxRows(p);
    }
    for (Eigen::Index c = 0; c < w; ++c) {
      const int target_class = binary ? 1 : static_cast<int>(c);
      for (std::size_t i = 0; i < n; ++i) {
        prob[i] = p(static_cast<Eigen::Index>(i), c);
        residual[i] = (y[i] == target_class ? 1.0 : 0.0) - prob[i];
      }
      auto leaf = [&](std::span<const std::size_t> rows) {
        double num = 0.0;
        double den = 0.0;
        for (const std::size_t r : rows) {
          num += residual[r];
          const double a = binary ? prob[r] : std::abs(residual[r]);
          den += a * (1.0 - a);
        }
        return prm.learning_rate * kfactor * NewtonStep(num, den);
      };
      Tree tree = BuildRegressionTree(d.features, residual, all, prm.max_depth,
                                      prm.min_samples_split, leaf);
      for (std::size_t i = 0; i < n; ++i) {
        const auto row = RowSpan(d.features, static_cast<Eigen::Index>(i));
        f(static_cast<Eigen::Index>(i), c) += tree.value(tree.Leaf(row))[0];
      }
      trees.push_back(std::move(tree));
    }
    history.push_back(MeanLogLoss(f, y));
  }
  return std::make_shared<BoostingModel>(spec, d.cols(), k, std::move(init), std::move(trees),
                                         std::move(history));
}

}  // namespace afe::models
