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

#ifndef AFE_MODELS_CLASSIFIER_HPP_
#define AFE_MODELS_CLASSIFIER_HPP_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

#include "afe/common/matrix.hpp"
#include "afe/data/data_matrix.hpp"

namespace afe::models {

enum class Kind { kLR, kDT, kGNB, kRF, kMLP, kGB };

inline constexpr Kind kAllKinds[] = {Kind::kLR, Kind::kDT,  Kind::kGNB,
                                     Kind::kRF, Kind::kMLP, Kind::kGB};

// Lower-case CLI token: "lr", "dt", "gnb", "rf", "mlp", "gb".
std::string_view KindName(Kind kind);
// Upper-case display name used in tables: "LR", "DT", ...
std::string_view KindLabel(Kind kind);
Kind ParseKind(std::string_view token);

enum class SplitCriterion { kGini, kEntropy };

struct LogisticParams {
  double l2 = 1.0;
  int max_iter = 1000;
  double grad_tol = 1e-6;
};

struct TreeParams {
  SplitCriterion criterion = SplitCriterion::kEntropy;
  int max_depth = 0;  // 0 = unlimited
  int min_samples_split = 2;
};

struct NaiveBayesParams {
  double var_smoothing = 1e-9;
};

struct ForestParams {
  int n_trees = 100;
  bool bootstrap = true;
  int max_features = 0;  // 0 = ceil(sqrt(p))
  SplitCriterion criterion = SplitCriterion::kGini;
  int max_depth = 0;
  int min_samples_split = 2;
};

struct MlpParams {
  int hidden = 100;
  double learning_rate = 1e-3;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;
  int batch_size = 32;
  int epochs = 200;
  double alpha = 1e-4;  // L2 penalty
  double tol = 1e-4;    // training-loss plateau tolerance
  int n_iter_no_change = 10;
};

struct BoostingParams {
  int n_stages = 100;
  int max_depth = 3;
  double learning_rate = 0.1;
  int min_samples_split = 2;
};

// Algorithm identifier plus hyperparameters. Only the block matching `kind`
// is read; the others keep their defaults.
struct ClassifierSpec {
  Kind kind = Kind::kDT;
  std::uint64_t seed = 0;
  LogisticParams lr;
  TreeParams dt;
  NaiveBayesParams gnb;
  ForestParams rf;
  MlpParams mlp;
  BoostingParams gb;

  static ClassifierSpec Default(Kind kind, std::uint64_t seed = 0);
  // Throws ConfigError for out-of-range hyperparameters.
  void Validate() const;

  // {"kind": "rf", "seed": 0, "params": {...}}
  std::string ToJsonText() const;
  static ClassifierSpec FromJsonText(const std::string& text);
};

// Immutable fitted predictor. Prediction is const and thread-safe.
class Model {
 public:
  Model(ClassifierSpec spec, std::size_t feature_count, int class_count)
      : spec_(std::move(spec)), feature_count_(feature_count), class_count_(class_count) {}
  virtual ~Model() = default;

  Model(const Model&) = delete;
  Model& operator=(const Model&) = delete;

  const ClassifierSpec& spec() const { return spec_; }
  std::size_t feature_count() const { return feature_count_; }
  int class_count() const { return class_count_; }

  // rows x class_count; every row sums to 1.
  Matrix PredictProba(const Matrix& x) const;
  // argmax of PredictProba, lowest class id on ties.
  Labels Predict(const Matrix& x) const;

 protected:
  virtual Matrix DoPredictProba(const Matrix& x) const = 0;

 private:
  ClassifierSpec spec_;
  std::size_t feature_count_;
  int class_count_;
};

using TrainedModel = std::shared_ptr<const Model>;

// Fits the classifier described by `spec`. Deterministic for fixed inputs.
// Throws DataError for single-class or non-finite training data.
TrainedModel Train(const ClassifierSpec& spec, const data::DataMatrix& d);

// Index of the largest entry; first wins on ties.
int ArgMax(std::span<const double> values);

}  // namespace afe::models

#endif  // AFE_MODELS_CLASSIFIER_HPP_
