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

#include "afe/core/fusion.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "afe/common/errors.hpp"

namespace afe::core {

MedianSelection MedianSelect(std::span<const double> scores) {
  if (scores.empty()) throw ConfigError("median selection of an empty vector");
  std::vector<double> sorted(scores.begin(), scores.end());
  std::sort(sorted.begin(), sorted.end());
  const std::size_t n = sorted.size();
  MedianSelection out;
  out.median = n % 2 == 1 ? sorted[n / 2] : 0.5 * (sorted[n / 2 - 1] + sorted[n / 2]);
  for (std::size_t j = 0; j < n; ++j) {
    if (scores[j] > out.median) out.features.push_back(j);
  }
  if (out.features.empty()) {
    out.fallback = true;
    for (std::size_t j = 0; j < n; ++j) out.features.push_back(j);
  }
  return out;
}

MethodWeights ComputeWeights(double acc_pct, double acc_shap, double acc_ga) {
  for (const double a : {acc_pct, acc_shap, acc_ga}) {
    if (!(a >= 0.0 && a <= 1.0)) {
      throw ConfigError("method accuracy " + std::to_string(a) + " outside [0, 1]");
    }
  }
  if (acc_pct + acc_shap + acc_ga <= 0.0) throw DataError("all methods at zero accuracy");
  auto share = [](double self, double a, double b) {
    return self > 0.0 ? 1.0 / (1.0 + a / self + b / self) : 0.0;
  };
  return {share(acc_pct, acc_shap, acc_ga), share(acc_shap, acc_pct, acc_ga),
          share(acc_ga, acc_pct, acc_shap)};
}

importance::ImportanceVector CombineImportances(const importance::ImportanceVector& pct,
                                                const importance::ImportanceVector& shap,
                                                const importance::ImportanceVector& ga,
                                                const MethodWeights& weights) {
  if (pct.size() != shap.size() || pct.size() != ga.size()) {
    throw ConfigError("importance length mismatch: " + std::to_string(pct.size()) + ", " +
                      std::to_string(shap.size()) + ", " + std::to_string(ga.size()));
  }
  importance::ImportanceVector out;
  out.method = importance::Method::kAFE;
  out.feature_names = pct.feature_names;
  out.scores.resize(pct.size());
  for (std::size_t j = 0; j < pct.size(); ++j) {
    out.scores[j] =
        weights.pct * pct.scores[j] + weights.shap * shap.scores[j] + weights.ga * ga.scores[j];
  }
  out.raw_scores = out.scores;
  return out;
}

}  // namespace afe::core
