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

#include "afe/core/afe.hpp"

#include <algorithm>

#include "afe/common/errors.hpp"
#include "afe/data/scaler.hpp"
#include "afe/data/split.hpp"

namespace afe::core {
namespace {

template <typename F>
auto Stage(const char* name, F&& body) {
  try {
    return body();
  } catch (const PipelineError&) {
    throw;
  } catch (const std::exception& e) {
    throw PipelineError(name, e.what());
  }
}

metrics::MetricsReport TrainAndScore(const models::ClassifierSpec& spec,
                                     const data::SplitPair& split, const FeatureSet& columns) {
  const auto model = models::Train(spec, split.train.SelectFeatures(columns));
  const auto pred = model->Predict(SelectColumns(split.test.features, columns));
  return metrics::Evaluate(split.test.labels, pred, split.test.n_classes);
}

MethodResult Finish(importance::ImportanceVector v, const models::ClassifierSpec& spec,
                    const data::SplitPair& split) {
  MethodResult out;
  out.selection = MedianSelect(v);
  out.metrics = TrainAndScore(spec, split, out.selection.features);
  out.importance = std::move(v);
  return out;
}

}  // namespace

void AfeConfig::SetSeed(std::uint64_t master) {
  seed = master;
  classifier.seed = master;
  ga.seed = master;
}

void AfeConfig::Validate() const {
  classifier.Validate();
  ga.Validate();
  if (!(split_ratio > 0.0 && split_ratio < 1.0)) throw ConfigError("split ratio must be in (0, 1)");
  if (pfi_repeats < 1) throw ConfigError("PFI repeats must be >= 1");
  if (background_size == 0) throw ConfigError("background size must be positive");
  if (shap_sample_cap == 0) throw ConfigError("SHAP sample cap must be positive");
}

AfeReport RunAfe(const AfeConfig& config, const data::DataMatrix& d,
                 const std::string& dataset_name) {
  config.Validate();
  AfeReport r;
  r.config = config;
  r.dataset_name = dataset_name;
  Stage("validate", [&] {
    d.Validate();
    if (d.cols() < 4) {
      throw DataError("AFE needs at least 4 features, got " + std::to_string(d.cols()));
    }
  });
  r.dataset_digest = d.Digest();
  r.rows = d.rows();
  r.feature_names = d.feature_names;
  r.class_names = d.class_names;

  data::SplitPair split = Stage("split", [&] {
    return data::StratifiedSplit(d, config.split_ratio, config.seed);
  });
  if (config.standardize) {
    Stage("standardize", [&] {
      const auto params = data::FitStandardize(split.train);
      split.train = data::ApplyStandardize(split.train, params);
      split.test = data::ApplyStandardize(split.test, params);
    });
  }
  r.train_rows = split.train.rows();
  r.test_rows = split.test.rows();

  FeatureSet all(d.cols());
  for (std::size_t j = 0; j < all.size(); ++j) all[j] = j;
  const models::ClassifierSpec& spec = config.classifier;

  const auto full_model = Stage("baseline", [&] {
    auto model = models::Train(spec, split.train);
    r.baseline = metrics::Evaluate(split.test.labels, model->Predict(split.test.features),
                                   split.test.n_classes);
    const auto counts = split.train.ClassCounts();
    const auto majority = static_cast<int>(
        std::max_element(counts.begin(), counts.end()) - counts.begin());
    const auto hits = std::count(split.test.labels.begin(), split.test.labels.end(), majority);
    r.majority_accuracy = static_cast<double>(hits) / static_cast<double>(split.test.rows());
    return model;
  });

  r.pct = Stage("pfi", [&] {
    return Finish(importance::PermutationImportance(*full_model, split.test,
                                                    config.pfi_repeats, config.seed),
                  spec, split);
  });
  r.shap = Stage("shap", [&] {
    const auto bg = importance::BackgroundSet::Sample(split.train.features,
                                                      config.background_size, config.seed);
    return Finish(importance::MeanAbsShap(*full_model, split.train, bg,
                                          config.shap_sample_cap, config.seed),
                  spec, split);
  });
  r.ga = Stage("ga", [&] {
    r.ga_result = importance::GaEvolve(spec, split.train, config.ga);
    return Finish(importance::GaImportance(r.ga_result, config.ga_binary_importance), spec,
                  split);
  });

  Stage("fusion", [&] {
    r.weights = ComputeWeights(r.pct.metrics.accuracy, r.shap.metrics.accuracy,
                               r.ga.metrics.accuracy);
    r.combined = CombineImportances(r.pct.importance, r.shap.importance, r.ga.importance,
                                    r.weights);
    r.ranking = importance::RankDescending(r.combined.scores);
  });
  Stage("afe_eval", [&] {
    r.afe_selection = MedianSelect(r.combined);
    r.afe_metrics = TrainAndScore(spec, split, r.afe_selection.features);
  });
  return r;
}

}  // namespace afe::core
