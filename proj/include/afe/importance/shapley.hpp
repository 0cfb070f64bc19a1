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

#ifndef AFE_IMPORTANCE_SHAPLEY_HPP_
#define AFE_IMPORTANCE_SHAPLEY_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "afe/common/matrix.hpp"
#include "afe/data/data_matrix.hpp"
#include "afe/importance/importance_vector.hpp"
#include "afe/models/classifier.hpp"

namespace afe::importance {

inline constexpr std::size_t kMaxExactShapleyFeatures = 20;
inline constexpr std::size_t kMaxPermutationShapleyFeatures = 10;
inline constexpr std::size_t kDefaultBackgroundSize = 64;
inline constexpr std::size_t kDefaultShapSampleCap = 128;

// Rows averaged over when a feature is absent from a coalition.
struct BackgroundSet {
  enum class Source { kTrainSample, kUserSupplied };
  Matrix rows;
  Source source = Source::kUserSupplied;

  // Up to `cap` rows drawn without replacement with the stream
  // (seed, "shap_background"), kept in source order. All rows when n <= cap.
  static BackgroundSet Sample(const Matrix& train, std::size_t cap, std::uint64_t seed);
  static BackgroundSet FromRows(Matrix rows);
};

struct ShapExplanation {
  std::vector<double> phi;
  double base_value = 0.0;  // f_x(empty)
  double fx_full = 0.0;     // f_x(all)
  std::size_t instance_index = 0;
};

struct ShapOptions {
  // Evaluate each coalition once up front. Off: recompute on every lookup.
  bool cache_coalitions = true;
  // Use the tree walks for tree models instead of predicting hybrid rows.
  bool tree_fast_path = true;
};

// Mean over background rows of the explained probability on the hybrid row
// (x on `coalition`, background elsewhere). The explained class is class 1
// for binary models and the predicted class of x otherwise.
double CoalitionValue(const models::Model& model, std::span<const double> x,
                      const FeatureSet& coalition, const BackgroundSet& bg,
                      const ShapOptions& options = {});

// phi_i = sum over S without i of |S|!(p-|S|-1)!/p! * (f(S+i) - f(S)).
ShapExplanation ShapleyExact(const models::Model& model, std::span<const double> x,
                             const BackgroundSet& bg, const ShapOptions& options = {});

// Average marginal gain over all p! feature orderings.
ShapExplanation ShapleyPermutationForm(const models::Model& model, std::span<const double> x,
                                       const BackgroundSet& bg,
                                       const ShapOptions& options = {});

// raw_j = mean |phi_j| over up to `sample_cap` rows of `eval_rows` drawn with
// the stream (seed, "shap_sample").
ImportanceVector MeanAbsShap(const models::Model& model, const data::DataMatrix& eval_rows,
                             const BackgroundSet& bg, std::size_t sample_cap,
                             std::uint64_t seed, const ShapOptions& options = {});

// Row indices MeanAbsShap explains, ascending.
std::vector<std::size_t> ShapSampleRows(std::size_t rows, std::size_t sample_cap,
                                        std::uint64_t seed);

}  // namespace afe::importance

#endif  // AFE_IMPORTANCE_SHAPLEY_HPP_
