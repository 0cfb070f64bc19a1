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

#include "afe/importance/permutation.hpp"

#include <algorithm>

#include "afe/common/errors.hpp"
#include "afe/common/parallel.hpp"
#include "afe/common/rng.hpp"
#include "afe/metrics/metrics.hpp"

namespace afe::importance {

ImportanceVector PermutationImportance(const models::Model& model,
                                       const data::DataMatrix& test, int repeats,
                                       std::uint64_t seed) {
  if (repeats < 1) throw ConfigError("permutation repeats must be >= 1");
  if (test.rows() == 0) throw DataError("permutation importance needs test rows");
  if (test.cols() != model.feature_count()) {
    throw ConfigError("model expects " + std::to_string(model.feature_count()) +
                      " columns, test data has " + std::to_string(test.cols()));
  }
  const std::size_t n = test.rows();
  const std::size_t p = test.cols();
  const auto reps = static_cast<std::size_t>(repeats);
  const long base_correct = metrics::CountCorrect(test.labels, model.Predict(test.features));

  // Integer counts keep a no-op shuffle at exactly zero.
  std::vector<long> correct(p * reps);
  ParallelFor(p * reps, [&](std::size_t task) {
    const std::size_t j = task / reps;
    const std::size_t r = task % reps;
    Matrix shuffled = test.features;
    std::vector<double> column(n);
    for (std::size_t i = 0; i < n; ++i) column[i] = shuffled(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
    Rng rng(seed, "pfi", j, r);
    rng.Shuffle(std::span<double>(column));
    for (std::size_t i = 0; i < n; ++i) shuffled(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = column[i];
    correct[task] = metrics::CountCorrect(test.labels, model.Predict(shuffled));
  });

  std::vector<double> raw(p);
  for (std::size_t j = 0; j < p; ++j) {
    long total = 0;
    for (std::size_t r = 0; r < reps; ++r) total += correct[j * reps + r];
    raw[j] = static_cast<double>(base_correct * static_cast<long>(reps) - total) /
             static_cast<double>(n * reps);
  }
  return ImportanceVector::FromRaw(Method::kPCT, std::move(raw), test.feature_names);
}

SubsetSearchResult ExhaustiveBestSubset(const models::ClassifierSpec& spec,
                                        const data::SplitPair& split,
                                        std::size_t max_features) {
  const std::size_t p = split.train.cols();
  if (p == 0) throw DataError("subset search needs at least one feature");
  if (p > max_features || p > kMaxExhaustiveFeatures) {
    throw ConfigError("exhaustive subset search capped at " +
                      std::to_string(std::min(max_features, kMaxExhaustiveFeatures)) +
                      " features, data has " + std::to_string(p));
  }
  const std::size_t count = (std::size_t{1} << p) - 1;
  auto subset_of = [p](std::size_t mask) {
    FeatureSet s;
    for (std::size_t j = 0; j < p; ++j) {
      if ((mask >> j) & 1U) s.push_back(j);
    }
    return s;
  };

  std::vector<double> fitness(count);
  ParallelFor(count, [&](std::size_t i) {
    const FeatureSet s = subset_of(i + 1);
    const auto model = models::Train(spec, split.train.SelectFeatures(s));
    const auto pred = model->Predict(SelectColumns(split.test.features, s));
    fitness[i] = metrics::Accuracy(split.test.labels, pred);
  });

  SubsetSearchResult best;
  best.evaluated = count;
  best.fitness = -1.0;
  for (std::size_t i = 0; i < count; ++i) {
    FeatureSet s = subset_of(i + 1);
    const bool better =
        fitness[i] > best.fitness ||
        (fitness[i] == best.fitness &&
         (s.size() < best.best_subset.size() ||
          (s.size() == best.best_subset.size() && s < best.best_subset)));
    if (better) {
      best.fitness = fitness[i];
      best.best_subset = std::move(s);
    }
  }
  return best;
}

}  // namespace afe::importance
