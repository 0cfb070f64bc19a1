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

#ifndef AFE_IMPORTANCE_PERMUTATION_HPP_
#define AFE_IMPORTANCE_PERMUTATION_HPP_

#include <cstdint>

#include "afe/data/data_matrix.hpp"
#include "afe/data/split.hpp"
#include "afe/importance/importance_vector.hpp"
#include "afe/models/classifier.hpp"

namespace afe::importance {

inline constexpr int kDefaultPfiRepeats = 10;
inline constexpr std::size_t kMaxExhaustiveFeatures = 16;

// raw_j = baseline accuracy - mean accuracy with column j shuffled. Repeat r
// of feature j shuffles with the stream (seed, "pfi", j, r).
ImportanceVector PermutationImportance(const models::Model& model,
                                       const data::DataMatrix& test, int repeats,
                                       std::uint64_t seed);

struct SubsetSearchResult {
  FeatureSet best_subset;
  double fitness = 0.0;
  std::size_t evaluated = 0;
};

// Trains on split.train for every non-empty column subset and scores on
// split.test. Ties prefer the smaller subset, then the lexicographically
// smaller index list.
SubsetSearchResult ExhaustiveBestSubset(const models::ClassifierSpec& spec,
                                        const data::SplitPair& split,
                                        std::size_t max_features = kMaxExhaustiveFeatures);

}  // namespace afe::importance

#endif  // AFE_IMPORTANCE_PERMUTATION_HPP_
