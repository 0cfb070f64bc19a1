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

#include "afe/models/mlp.hpp"

#include <cmath>
#include <limits>
#include <numeric>

#include "afe/common/rng.hpp"

namespace afe::models {
namespace {

void SoftmaxRows(Eigen::MatrixXd& z) {
  for (Eigen::Index r = 0; r < z.rows(); ++r) {
    const double m = z.row(r).maxCoeff();
    z.row(r) = (z.row(r).array() - m).exp();
    z.row(r) /= z.row(r).sum();
  }
}

Eigen::MatrixXd Hidden(const MlpWeights& w, const Matrix& x) {
  Eigen::MatrixXd h = x * w.w1.transpose();
  h.rowwise() += w.b1.transpose();
  return h.cwiseMax(0.0);
}

Eigen::MatrixXd Output(const MlpWeights& w, const Eigen::MatrixXd& h) {
  Eigen::MatrixXd z = h * w.w2.transpose();
  z.rowwise() += w.b2.transpose();
  SoftmaxRows(z);
  return z;
}

void FillUniform(Eigen::MatrixXd& m, double bound, Rng& rng) {
  for (Eigen::Index i = 0; i < m.size(); ++i) m.data()[i] = (2.0 * rng.Uniform() - 1.0) * bound;
}

void FillUniform(Eigen::VectorXd& v, double bound, Rng& rng) {
  for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = (2.0 * rng.Uniform() - 1.0) * bound;
}

struct AdamSlot {
  Eigen::ArrayXXd m;
  Eigen::ArrayXXd v;

  template <typename Param>
  void Step(Param& param, const Param& grad, double lr_t, double beta1, double beta2,
            double eps) {
    if (m.size() == 0) {
      m = Eigen::ArrayXXd::Zero(param.rows(), param.cols());
      v = Eigen::ArrayXXd::Zero(param.rows(), param.cols());
    }
    const Eigen::ArrayXXd g = grad.array();
    m = beta1 * m + (1.0 - beta1) * g;
    v = beta2 * v + (1.0 - beta2) * g.square();
    param.array() -= lr_t * m / (v.sqrt() + eps);
  }
};

}  // namespace

double MlpLossAndGradient(const MlpWeights& w, const Matrix& x, std::span<const int> y,
                          double alpha, MlpWeights* grad) {
  const auto n = static_cast<double>(x.rows());
  const Eigen::MatrixXd h = Hidden(w, x);
  Eigen::MatrixXd p = Output(w, h);

  double loss = 0.0;
  for (Eigen::Index i = 0; i < p.rows(); ++i) {
    const double pi = p(i, y[static_cast<std::size_t>(i)]);
    loss -= std::log(std::max(pi, std::numeric_limits<double>::min()));
  }
  loss = loss / n + 0.5 * alpha * (w.w1.squaredNorm() + w.w2.squaredNorm()) / n;
  if (grad == nullptr) return loss;

  for (Eigen::Index i = 0; i < p.rows(); ++i) p(i, y[static_cast<std::size_t>(i)]) -= 1.0;
  const Eigen::MatrixXd dz = p / n;
  grad->w2 = dz.transpose() * h + (alpha / n) * w.w2;
  grad->b2 = dz.colwise().sum().transpose();
  const Eigen::MatrixXd dh = ((dz * w.w2).array() * (h.array() > 0.0).cast<double>()).matrix();
  grad->w1 = dh.transpose() * x + (alpha / n) * w.w1;
  grad->b1 = dh.colwise().sum().transpose();
  return loss;
}

MlpModel::MlpModel(ClassifierSpec spec, int class_count, MlpWeights weights,
                   std::vector<double> loss_curve)
    : Model(std::move(spec), static_cast<std::size_t>(weights.w1.cols()), class_count),
      weights_(std::move(weights)),
      loss_curve_(std::move(loss_curve)) {}

Matrix MlpModel::DoPredictProba(const Matrix& x) const {
  Matrix out = Output(weights_, Hidden(weights_, x));
  return out;
}

TrainedModel TrainMlp(const ClassifierSpec& spec, const data::DataMatrix& d) {
  const MlpParams& prm = spec.mlp;
  const Eigen::Index p = d.features.cols();
  const Eigen::Index k = d.n_classes;
  const Eigen::Index hidden = prm.hidden;

  MlpWeights w{Eigen::MatrixXd(hidden, p), Eigen::VectorXd(hidden),
               Eigen::MatrixXd(k, hidden), Eigen::VectorXd(k)};
  Rng init(spec.seed, "mlp_init");
  const double bound1 = std::sqrt(6.0 / static_cast<double>(p + hidden));
  const double bound2 = std::sqrt(6.0 / static_cast<double>(hidden + k));
  FillUniform(w.w1, bound1, init);
  FillUniform(w.b1, bound1, init);
  FillUniform(w.w2, bound2, init);
  FillUniform(w.b2, bound2, init);

  const std::size_t n = d.rows();
  const auto batch = std::min<std::size_t>(static_cast<std::size_t>(prm.batch_size), n);
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);

  AdamSlot s_w1, s_b1, s_w2, s_b2;
  MlpWeights grad;
  std::vector<double> curve;
  double best_loss = std::numeric_limits<double>::infinity();
  int no_improvement = 0;
  long step = 0;
  std::vector<int> yb;
  for (int epoch = 0; epoch < prm.epochs; ++epoch) {
    Rng shuffle(spec.seed, "mlp_shuffle", static_cast<std::uint64_t>(epoch));
    shuffle.Shuffle(std::span<std::size_t>(order));
    double epoch_loss = 0.0;
    for (std::size_t start = 0; start < n; start += batch) {
      const std::size_t stop = std::min(start + batch, n);
      const std::span<const std::size_t> idx(order.data() + start, stop - start);
      const Matrix xb = SelectRows(d.features, idx);
      yb.resize(idx.size());
      for (std::size_t i = 0; i < idx.size(); ++i) yb[i] = d.labels[idx[i]];

      const double loss = MlpLossAndGradient(w, xb, yb, prm.alpha, &grad);
      epoch_loss += loss * static_cast<double>(idx.size());

      ++step;
      const double lr_t = prm.learning_rate *
                          std::sqrt(1.0 - std::pow(prm.beta2, static_cast<double>(step))) /
                          (1.0 - std::pow(prm.beta1, static_cast<double>(step)));
      s_w1.Step(w.w1, grad.w1, lr_t, prm.beta1, prm.beta2, prm.epsilon);
      s_b1.Step(w.b1, grad.b1, lr_t, prm.beta1, prm.beta2, prm.epsilon);
      s_w2.Step(w.w2, grad.w2, lr_t, prm.beta1, prm.beta2, prm.epsilon);
      s_b2.Step(w.b2, grad.b2, lr_t, prm.beta1, prm.beta2, prm.epsilon);
    }
    epoch_loss /= static_cast<double>(n);
    curve.push_back(epoch_loss);

    if (epoch_loss > best_loss - prm.tol) {
      ++no_improvement;
    } else {
      no_improvement = 0;
    }
    best_loss = std::min(best_loss, epoch_loss);
    if (no_improvement > prm.n_iter_no_change) break;
  }
  return std::make_shared<MlpModel>(spec, d.n_classes, std::move(w), std::move(curve));
}

}  // namespace afe::models
