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

#ifndef AFE_CORE_FUSION_HPP_
#define AFE_CORE_FUSION_HPP_

#include <span>

#include "afe/common/matrix.hpp"
#include "afe/importance/importance_vector.hpp"

namespace afe::core {

struct MedianSelection {
  FeatureSet features;
  double median = 0.0;
  // Nothing scored strictly above the median; all features were kept.
  bool fallback = false;
};

// Indices whose score is strictly greater than the median (mean of the two
// middle values for even lengths).
MedianSelection MedianSelect(std::span<const double> scores);
inline MedianSelection MedianSelect(const importance::ImportanceVector& v) {
  return MedianSelect(v.scores);
}

struct MethodWeights {
  double pct = 0.0;
  double shap = 0.0;
  double ga = 0.0;
};

// Each weight is its accuracy over the total. Written as
// 1 / (1 + a_j/a_i + a_k/a_i) so equal accuracies give exactly 1/3.
// Throws DataError when every accuracy is zero.
MethodWeights ComputeWeights(double acc_pct, double acc_shap, double acc_ga);

// Convex combination of three normalized vectors, tagged AFE.
importance::ImportanceVector CombineImportances(const importance::ImportanceVector& pct,
                                                const importance::ImportanceVector& shap,
                                                const importance::ImportanceVector& ga,
                                                const MethodWeights& weights);

}  // namespace afe::core

#endif  // AFE_CORE_FUSION_HPP_
