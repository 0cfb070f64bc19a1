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

#ifndef AFE_IMPORTANCE_GENETIC_HPP_
#define AFE_IMPORTANCE_GENETIC_HPP_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "afe/data/data_matrix.hpp"
#include "afe/importance/importance_vector.hpp"
#include "afe/models/classifier.hpp"

namespace afe::importance {

using FeatureMask = std::vector<bool>;

struct GaConfig {
  std::size_t population = 30;
  std::size_t elite = 10;
  double crossover_rate = 0.8;
  double mutation_rate = 0.05;
  int max_iter = 25;
  std::uint64_t seed = 0;
  double fitness_holdout = 0.2;

  // Throws ConfigError.
  void Validate() const;
};

struct GaResult {
  FeatureMask best_mask;
  double best_fitness = 0.0;
  // Sorted by fitness, best first.
  std::vector<std::pair<FeatureMask, double>> final_population;
  // Best fitness of the initial population, then after every generation.
  std::vector<double> fitness_history;
  std::uint64_t seed = 0;
  std::size_t elite = 0;
  // Distinct masks trained.
  std::size_t evaluations = 0;
  std::vector<std::string> feature_names;
};

// Fitness is holdout accuracy on a stratified split of `train`
// (fitness_holdout of it held out). Each generation keeps the top `elite`
// individuals; every other slot is replaced by a child only when crossover
// fires, and the child is then mutated bit by bit. Child slot s of
// generation g draws from (seed, "ga_child", g, s).
GaResult GaEvolve(const models::ClassifierSpec& spec, const data::DataMatrix& train,
                  const GaConfig& config);

// Default: fraction of the top-k final individuals containing each feature.
// binary = true scores membership in the best mask instead.
ImportanceVector GaImportance(const GaResult& result, bool binary = false);

FeatureSet MaskToSet(const FeatureMask& mask);

}  // namespace afe::importance

#endif  // AFE_IMPORTANCE_GENETIC_HPP_
