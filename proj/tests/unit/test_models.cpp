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

#include <cmath>

#include "doctest.h"
#include "test_support.hpp"

#include "afe/common/errors.hpp"
#include "afe/data/split.hpp"
#include "afe/data/synth.hpp"
#include "afe/metrics/metrics.hpp"
#include "afe/models/boosting.hpp"
#include "afe/models/forest.hpp"
#include "afe/models/logistic.hpp"
#include "afe/models/mlp.hpp"
#include "afe/models/naive_bayes.hpp"
#include "afe/models/tree.hpp"

using namespace afe;
using afe::testing::Blobs;
using afe::testing::MakeData;
using afe::testing::Rows;
using models::ClassifierSpec;
using models::Kind;

namespace {

ClassifierSpec Fast(Kind kind) {
  auto s = ClassifierSpec::Default(kind, 3);
  s.rf.n_trees = 15;
  s.mlp.epochs = 40;
  s.gb.n_stages = 30;
  return s;
}

}  // namespace

TEST_CASE("every model: shape, normalization, determinism, sanity accuracy") {
  for (const int classes : {2, 3}) {
    const auto d = Blobs(180, 4, 2, classes, 5);
    const auto split = data::StratifiedSplit(d, 0.7, 1);
    for (const auto kind : models::kAllKinds) {
      CAPTURE(models::KindName(kind));
      CAPTURE(classes);
      const auto spec = Fast(kind);
      const auto m = models::Train(spec, split.train);
      const auto proba = m->PredictProba(split.test.features);
      REQUIRE(proba.rows() == split.test.features.rows());
      REQUIRE(proba.cols() == classes);
      for (Eigen::Index r = 0; r < proba.rows(); ++r) {
        CHECK(std::abs(proba.row(r).sum() - 1.0) < 1e-9);
        CHECK(proba.row(r).allFinite());
      }
      CHECK(metrics::Accuracy(split.test.labels, m->Predict(split.test.features)) > 0.7);

      const auto again = models::Train(spec, split.train);
      CHECK(again->PredictProba(split.test.features) == proba);

      CHECK(m->PredictProba(Matrix(0, 4)).rows() == 0);
      CHECK_THROWS_AS(m->PredictProba(Matrix::Zero(2, 3)), ConfigError);
    }
  }
}

TEST_CASE("single-class and non-finite training data are rejected") {
  const auto one = MakeData(Rows({{1}, {2}, {3}}), Labels{0, 0, 0}, 2);
  for (const auto kind : models::kAllKinds) CHECK_THROWS_AS(models::Train(Fast(kind), one), DataError);
  auto bad = MakeData(Rows({{1}, {2}}), Labels{0, 1}, 2);
  bad.features(0, 0) = std::nan("");
  CHECK_THROWS_AS(models::Train(Fast(Kind::kLR), bad), DataError);
}

TEST_CASE("logistic at z = 0 gives one half and ties go to class 0") {
  const auto m = models::LogisticModel::FromParameters(Eigen::MatrixXd::Zero(1, 3),
                                                       Eigen::VectorXd::Zero(1), 2);
  const auto proba = m->PredictProba(Rows({{1, -2, 3}, {0, 0, 0}}));
  CHECK(proba(0, 0) == 0.5);
  CHECK(proba(0, 1) == 0.5);
  CHECK(m->Predict(Rows({{4, 4, 4}})) == Labels{0});
}

TEST_CASE("Gaussian NB picks the nearer class") {
  const auto sym = MakeData(Rows({{0}, {0}, {4}, {4}}), Labels{0, 0, 1, 1}, 2);
  const auto m = models::Train(Fast(Kind::kGNB), sym);
  CHECK(m->Predict(Rows({{1}})) == Labels{0});
  CHECK(m->Predict(Rows({{3}})) == Labels{1});
}

TEST_CASE("a pure node is a single leaf") {
  const Matrix x = Rows({{1, 2}, {3, 4}, {5, 6}});
  const Labels y{1, 1, 1};
  const auto tree = models::BuildClassificationTree(x, y, 2, {0, 1, 2}, {}, nullptr);
  CHECK(tree.nodes().size() == 1);
  CHECK(tree.value(0)[1] == 1.0);
}

TEST_CASE("decision tree fits its training data") {
  const auto d = Blobs(120, 3, 1, 2, 9);
  const auto m = models::Train(ClassifierSpec::Default(Kind::kDT), d);
  CHECK(metrics::Accuracy(d.labels, m->Predict(d.features)) == 1.0);
}

TEST_CASE("forest of one tree without bootstrap equals the decision tree") {
  const auto d = Blobs(150, 5, 3, 3, 2);
  auto rf = ClassifierSpec::Default(Kind::kRF, 4);
  rf.rf.n_trees = 1;
  rf.rf.bootstrap = false;
  rf.rf.max_features = 5;
  rf.rf.criterion = models::SplitCriterion::kEntropy;
  const auto forest = models::Train(rf, d);
  const auto tree = models::Train(ClassifierSpec::Default(Kind::kDT), d);
  const auto probe = Blobs(200, 5, 3, 3, 77);
  CHECK(forest->Predict(probe.features) == tree->Predict(probe.features));
}

TEST_CASE("tree models are invariant to increasing per-column transforms") {
  const auto d = data::SynthDataset(200, 3, 0, 4);
  auto warped = d;
  warped.features = d.features.unaryExpr([](double v) { return v * v * v + std::exp(v); });
  const auto split = data::StratifiedSplit(d, 0.7, 0);
  const auto wsplit = data::StratifiedSplit(warped, 0.7, 0);
  for (const auto kind : {Kind::kDT, Kind::kRF, Kind::kGB}) {
    CAPTURE(models::KindName(kind));
    auto spec = Fast(kind);
    // A bootstrap sample can miss a grid value; midpoints in that gap do not
    // survive the transform.
    spec.rf.bootstrap = false;
    spec.rf.max_features = 2;
    const auto a = models::Train(spec, split.train);
    const auto b = models::Train(spec, wsplit.train);
    CHECK(a->Predict(split.test.features) == b->Predict(wsplit.test.features));
  }
}

TEST_CASE("MLP gradient matches central differences") {
  std::mt19937_64 gen(8);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const Eigen::Index p = 3, h = 6, k = 3;
  models::MlpWeights w{Eigen::MatrixXd(h, p), Eigen::VectorXd(h), Eigen::MatrixXd(k, h),
                       Eigen::VectorXd(k)};
  for (auto* m : {&w.w1, &w.w2}) {
    for (Eigen::Index i = 0; i < m->size(); ++i) m->data()[i] = u(gen);
  }
  for (auto* v : {&w.b1, &w.b2}) {
    for (Eigen::Index i = 0; i < v->size(); ++i) v->data()[i] = u(gen);
  }
  Matrix x(5, p);
  for (Eigen::Index i = 0; i < x.size(); ++i) x.data()[i] = u(gen);
  const std::vector<int> y{0, 2, 1, 1, 0};
  const double alpha = 0.05;

  models::MlpWeights grad;
  models::MlpLossAndGradient(w, x, y, alpha, &grad);

  const double step = 1e-6;
  auto check = [&](Eigen::Ref<Eigen::MatrixXd> param, const Eigen::MatrixXd& analytic) {
    for (Eigen::Index i = 0; i < param.rows(); ++i) {
      for (Eigen::Index j = 0; j < param.cols(); ++j) {
        const double keep = param(i, j);
        param(i, j) = keep + step;
        const double up = models::MlpLossAndGradient(w, x, y, alpha, nullptr);
        param(i, j) = keep - step;
        const double down = models::MlpLossAndGradient(w, x, y, alpha, nullptr);
        param(i, j) = keep;
        const double numeric = (up - down) / (2 * step);
        const double a = analytic(i, j);
        CHECK(std::abs(a - numeric) / std::max(std::abs(a) + std::abs(numeric), 1e-8) < 1e-4);
      }
    }
  };
  check(w.w1, grad.w1);
  check(w.b1, grad.b1);
  check(w.w2, grad.w2);
  check(w.b2, grad.b2);
}

TEST_CASE("MLP stops on a training-loss plateau") {
  const auto d = Blobs(200, 3, 3, 2, 1);
  const auto m = models::Train(ClassifierSpec::Default(Kind::kMLP, 0), d);
  const auto& mlp = dynamic_cast<const models::MlpModel&>(*m);
  CHECK(mlp.loss_curve().size() <= 200);
  CHECK(mlp.loss_curve().back() < mlp.loss_curve().front());
}

TEST_CASE("boosting training loss never increases") {
  for (const int classes : {2, 3}) {
    const auto d = Blobs(150, 4, 2, classes, 6);
    const auto m = models::Train(ClassifierSpec::Default(Kind::kGB), d);
    const auto& gb = dynamic_cast<const models::BoostingModel&>(*m);
    const auto& h = gb.train_loss_history();
    REQUIRE(h.size() == 100);
    for (std::size_t i = 1; i < h.size(); ++i) CHECK(h[i] <= h[i - 1] + 1e-12);
  }
}

TEST_CASE("classifier spec JSON round trip and validation") {
  for (const auto kind : models::kAllKinds) {
    auto s = ClassifierSpec::Default(kind, 42);
    const auto text = s.ToJsonText();
    CHECK(ClassifierSpec::FromJsonText(text).ToJsonText() == text);
  }
  auto bad = ClassifierSpec::Default(Kind::kRF);
  bad.rf.n_trees = 0;
  CHECK_THROWS_AS(bad.Validate(), ConfigError);
  auto bad_lr = ClassifierSpec::Default(Kind::kMLP);
  bad_lr.mlp.learning_rate = 0.0;
  CHECK_THROWS_AS(bad_lr.Validate(), ConfigError);
  CHECK_THROWS_AS(models::ParseKind("svm"), ConfigError);
}
