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

#include "afe/models/logistic.hpp"

#include <cmath>

#include "afe/common/errors.hpp"

namespace afe::models {
namespace {

double Softplus(double z) { return z > 0.0 ? z + std::log1p(std::exp(-z)) : std::log1p(std::exp(z)); }

double Sigmoid(double z) {
  if (z >= 0.0) return 1.0 / (1.0 + std::exp(-z));
  const double e = std::exp(z);
  return e / (1.0 + e);
}

// Row-wise softmax in place.
void Softmax(Eigen::MatrixXd& z) {
  for (Eigen::Index r = 0; r < z.rows(); ++r) {
    const double m = z.row(r).maxCoeff();
    z.row(r) = (z.row(r).array() - m).exp();
    z.row(r) /= z.row(r).sum();
  }
}

struct Objective {
  const Matrix& x;
  const Labels& y;
  int classes;
  double l2;

  // Returns the objective; fills gradients when requested.
  double operator()(const Eigen::MatrixXd& w, const Eigen::VectorXd& b,
                    Eigen::MatrixXd* gw, Eigen::VectorXd* gb) const {
    double loss = 0.5 * l2 * w.squaredNorm();
    if (classes == 2) {
      const Eigen::VectorXd z = (x * w.row(0).transpose()).array() + b(0);
      Eigen::VectorXd residual(z.size());
      for (Eigen::Index i = 0; i < z.size(); ++i) {
        const double yi = y[static_cast<std::size_t>(i)];
        loss += Softplus(z(i)) - yi * z(i);
        residual(i) = Sigmoid(z(i)) - yi;
      }
      if (gw != nullptr) {
        *gw = (x.transpose() * residual).transpose() + l2 * w;
        *gb = Eigen::VectorXd::Constant(1, residual.sum());
      }
      return loss;
    }
    Eigen::MatrixXd z = x * w.transpose();
    z.rowwise() += b.transpose();
    for (Eigen::Index i = 0; i < z.rows(); ++i) {
      const double m = z.row(i).maxCoeff();
      loss += m + std::log((z.row(i).array() - m).exp().sum()) -
              z(i, y[static_cast<std::size_t>(i)]);
    }
    if (gw != nullptr) {
      Softmax(z);
      for (Eigen::Index i = 0; i < z.rows(); ++i) z(i, y[static_cast<std::size_t>(i)]) -= 1.0;
      *gw = z.transpose() * x + l2 * w;
      *gb = z.colwise().sum().transpose();
    }
    return loss;
  }
};

}  // namespace

LogisticModel::LogisticModel(ClassifierSpec spec, int class_count, Eigen::MatrixXd weights,
                             Eigen::VectorXd bias)
    : Model(std::move(spec), static_cast<std::size_t>(weights.cols()), class_count),
      weights_(std::move(weights)),
      bias_(std::move(bias)) {
  const Eigen::Index rows = class_count == 2 ? 1 : class_count;
  if (weights_.rows() != rows || bias_.size() != rows) {
    throw ConfigError("logistic parameters do not match class count");
  }
}

TrainedModel LogisticModel::FromParameters(Eigen::MatrixXd weights, Eigen::VectorXd bias,
                                           int class_count) {
  return std::make_shared<LogisticModel>(ClassifierSpec::Default(Kind::kLR), class_count,
                                         std::move(weights), std::move(bias));
}

Matrix LogisticModel::DoPredictProba(const Matrix& x) const {
  Matrix out(x.rows(), class_count());
  if (class_count() == 2) {
    const Eigen::VectorXd z = (x * weights_.row(0).transpose()).array() + bias_(0);
    for (Eigen::Index i = 0; i < z.size(); ++i) {
      const double p = Sigmoid(z(i));
      out(i, 0) = 1.0 - p;
      out(i, 1) = p;
    }
    return out;
  }
  Eigen::MatrixXd z = x * weights_.transpose();
  z.rowwise() += bias_.transpose();
  Softmax(z);
  out = z;
  return out;
}

TrainedModel TrainLogistic(const ClassifierSpec& spec, const data::DataMatrix& d) {
  const int k = d.n_classes;
  const Eigen::Index rows = k == 2 ? 1 : k;
  const Eigen::Index p = d.features.cols();
  const Objective objective{d.features, d.labels, k, spec.lr.l2};

  Eigen::MatrixXd w = Eigen::MatrixXd::Zero(rows, p);
  Eigen::VectorXd b = Eigen::VectorXd::Zero(rows);
  Eigen::MatrixXd gw;
  Eigen::VectorXd gb;
  double step = 1.0;
  int iter = 0;
  for (; iter < spec.lr.max_iter; ++iter) {
    const double f = objective(w, b, &gw, &gb);
    const double grad_sq = gw.squaredNorm() + gb.squaredNorm();
    if (std::sqrt(grad_sq) < spec.lr.grad_tol) break;
    step *= 2.0;
    bool accepted = false;
    for (int halving = 0; halving < 80; ++halving) {
      const Eigen::MatrixXd w_next = w - step * gw;
      const Eigen::VectorXd b_next = b - step * gb;
      if (objective(w_next, b_next, nullptr, nullptr) <= f - 0.5 * step * grad_sq) {
        w = w_next;
        b = b_next;
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) break;
  }

  auto model = std::make_shared<LogisticModel>(spec, k, std::move(w), std::move(b));
  model->iterations_ = iter;
  return model;
}

}  // namespace afe::models
