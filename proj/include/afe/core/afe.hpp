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

#ifndef AFE_CORE_AFE_HPP_
#define AFE_CORE_AFE_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "afe/core/fusion.hpp"
#include "afe/data/data_matrix.hpp"
#include "afe/importance/genetic.hpp"
#include "afe/importance/importance_vector.hpp"
#include "afe/importance/permutation.hpp"
#include "afe/importance/shapley.hpp"
#include "afe/metrics/metrics.hpp"
#include "afe/models/classifier.hpp"

namespace afe::core {

struct AfeConfig {
  models::ClassifierSpec classifier = models::ClassifierSpec::Default(models::Kind::kRF);
  double split_ratio = 0.7;
  // Split, permutation, background and sampling streams.
  std::uint64_t seed = 0;
  bool standardize = true;
  int pfi_repeats = importance::kDefaultPfiRepeats;
  importance::GaConfig ga;
  bool ga_binary_importance = false;
  std::size_t background_size = importance::kDefaultBackgroundSize;
  std::size_t shap_sample_cap = importance::kDefaultShapSampleCap;

  // Sets the classifier, GA and pipeline seeds together.
  void SetSeed(std::uint64_t master);
  void Validate() const;
};

struct MethodResult {
  importance::ImportanceVector importance;
  MedianSelection selection;
  metrics::MetricsReport metrics;
};

struct AfeReport {
  AfeConfig config;
  std::string dataset_name;
  std::uint64_t dataset_digest = 0;
  std::size_t rows = 0;
  std::size_t train_rows = 0;
  std::size_t test_rows = 0;
  std::vector<std::string> feature_names;
  std::vector<std::string> class_names;

  metrics::MetricsReport baseline;  // all features
  double majority_accuracy = 0.0;   // majority training class on the test split
  MethodResult pct;
  MethodResult shap;
  MethodResult ga;
  importance::GaResult ga_result;
  MethodWeights weights;
  importance::ImportanceVector combined;
  std::vector<std::size_t> ranking;  // descending combined score
  MedianSelection afe_selection;
  metrics::MetricsReport afe_metrics;
};

// Split, standardize, run the three engines, select by median, retrain per
// selection, weight by accuracy, fuse and rank, then retrain on the fused
// selection. Failures surface as PipelineError naming the stage.
AfeReport RunAfe(const AfeConfig& config, const data::DataMatrix& d,
                 const std::string& dataset_name = "");

}  // namespace afe::core

#endif  // AFE_CORE_AFE_HPP_
