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

#include "afe/importance/genetic.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "afe/common/errors.hpp"
#include "afe/common/parallel.hpp"
#include "afe/common/rng.hpp"
#include "afe/data/split.hpp"
#include "afe/metrics/metrics.hpp"

namespace afe::importance {
namespace {

constexpr int kHoldoutAttempts = 5;

bool Empty(const FeatureMask& mask) {
  return std::none_of(mask.begin(), mask.end(), [](bool b) { return b; });
}

void Repair(FeatureMask& mask, Rng& rng) {
  if (Empty(mask)) mask[static_cast<std::size_t>(rng.UniformInt(mask.size()))] = true;
}

data::SplitPair FitnessHoldout(const data::DataMatrix& train, const GaConfig& config) {
  int present = 0;
  for (const auto c : train.ClassCounts()) present += c > 0 ? 1 : 0;
  std::string last_error = "class missing from holdout";
  for (int attempt = 0; attempt < kHoldoutAttempts; ++attempt) {
    try {
      auto split = data::StratifiedSplit(
          train, 1.0 - config.fitness_holdout,
          DeriveSeed(config.seed, "ga_holdout", static_cast<std::uint64_t>(attempt)));
      int train_present = 0;
      for (const auto c : split.train.ClassCounts()) train_present += c > 0 ? 1 : 0;
      if (present >= 2 && train_present == present) return split;
    } catch (const DataError& e) {
      last_error = e.what();
    }
  }
  throw DataError("GA fitness holdout degenerate after " + std::to_string(kHoldoutAttempts) +
                  " attempts: " + last_error);
}

}  // namespace

void GaConfig::Validate() const {
  if (population < 2) throw ConfigError("GA population must be >= 2");
  if (elite < 1 || elite > population) throw ConfigError("GA elite must be in [1, population]");
  if (crossover_rate < 0.0 || crossover_rate > 1.0) {
    throw ConfigError("GA crossover rate must be in [0, 1]");
  }
  if (mutation_rate < 0.0 || mutation_rate > 1.0) {
    throw ConfigError("GA mutation rate must be in [0, 1]");
  }
  if (max_iter < 0) throw ConfigError("GA max_iter must be >= 0");
  if (!(fitness_holdout > 0.0 && fitness_holdout < 1.0)) {
    throw ConfigError("GA fitness holdout must be in (0, 1)");
  }
}

FeatureSet MaskToSet(const FeatureMask& mask) {
  FeatureSet s;
  for (std::size_t j = 0; j < mask.size(); ++j) {
    if (mask[j]) s.push_back(j);
  }
  return s;
}

GaResult GaEvolve(const models::ClassifierSpec& spec, const data::DataMatrix& train,
                  const GaConfig& config) {
  config.Validate();
  const std::size_t p = train.cols();
  if (p < 2) throw DataError("GA needs at least 2 features, got " + std::to_string(p));
  const data::SplitPair holdout = FitnessHoldout(train, config);

  std::map<FeatureMask, double> memo;
  auto evaluate = [&](const std::vector<FeatureMask>& population) {
    std::vector<FeatureMask> pending;
    for (const auto& m : population) {
      if (!memo.contains(m) && std::find(pending.begin(), pending.end(), m) == pending.end()) {
        pending.push_back(m);
      }
    }
    std::vector<double> scores(pending.size());
    ParallelFor(pending.size(), [&](std::size_t i) {
      const FeatureSet s = MaskToSet(pending[i]);
      const auto model = models::Train(spec, holdout.train.SelectFeatures(s));
      scores[i] = metrics::Accuracy(holdout.test.labels,
                                    model->Predict(SelectColumns(holdout.test.features, s)));
    });
    for (std::size_t i = 0; i < pending.size(); ++i) memo.emplace(pending[i], scores[i]);
  };
  auto ranked = [&](const std::vector<FeatureMask>& population) {
    std::vector<std::size_t> order(population.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return memo.at(population[a]) > memo.at(population[b]);
    });
    std::vector<FeatureMask> out;
    out.reserve(population.size());
    for (const auto i : order) out.push_back(population[i]);
    return out;
  };

  const std::size_t n = config.population;
  const std::size_t k = config.elite;
  std::vector<FeatureMask> population(n, FeatureMask(p, false));
  for (std::size_t i = 0; i < n; ++i) {
    Rng rng(config.seed, "ga_init", i);
    for (std::size_t j = 0; j < p; ++j) population[i][j] = rng.Bernoulli(0.5);
    Repair(population[i], rng);
  }
  evaluate(population);
  population = ranked(population);

  GaResult result;
  result.fitness_history.push_back(memo.at(population.front()));
  for (int gen = 1; gen <= config.max_iter && result.fitness_history.back() < 1.0; ++gen) {
    for (std::size_t s = 0; s + k < n; ++s) {
      Rng rng(config.seed, "ga_child", static_cast<std::uint64_t>(gen), s);
      const auto a = static_cast<std::size_t>(rng.UniformInt(k));
      const std::size_t b = k > 1 ? (a + 1 + static_cast<std::size_t>(rng.UniformInt(k - 1))) % k : a;
      if (!rng.Bernoulli(config.crossover_rate)) continue;
      const auto cut = 1 + static_cast<std::size_t>(rng.UniformInt(p - 1));
      FeatureMask child(p);
      for (std::size_t j = 0; j < p; ++j) child[j] = j < cut ? population[a][j] : population[b][j];
      for (std::size_t j = 0; j < p; ++j) {
        if (rng.Bernoulli(config.mutation_rate)) child[j] = !child[j];
      }
      Repair(child, rng);
      population[k + s] = std::move(child);
    }
    evaluate(population);
    population = ranked(population);
    result.fitness_history.push_back(memo.at(population.front()));
  }

  for (auto& m : population) {
    const double f = memo.at(m);
    result.final_population.emplace_back(std::move(m), f);
  }
  result.best_mask = result.final_population.front().first;
  result.best_fitness = result.final_population.front().second;
  result.seed = config.seed;
  result.elite = k;
  result.evaluations = memo.size();
  result.feature_names = train.feature_names;
  return result;
}

ImportanceVector GaImportance(const GaResult& result, bool binary) {
  if (result.final_population.empty()) throw ConfigError("GA result has an empty population");
  const std::size_t p = result.best_mask.size();
  std::vector<double> raw(p, 0.0);
  if (binary) {
    for (std::size_t j = 0; j < p; ++j) raw[j] = result.best_mask[j] ? 1.0 : 0.0;
  } else {
    const std::size_t k = std::min(std::max<std::size_t>(result.elite, 1),
                                   result.final_population.size());
    for (std::size_t i = 0; i < k; ++i) {
      const auto& mask = result.final_population[i].first;
      for (std::size_t j = 0; j < p; ++j) raw[j] += mask[j] ? 1.0 : 0.0;
    }
    for (double& r : raw) r /= static_cast<double>(k);
  }
  std::vector<std::string> names = result.feature_names;
  if (names.size() != p) {
    names.clear();
    for (std::size_t j = 0; j < p; ++j) names.push_back("f" + std::to_string(j));
  }
  return ImportanceVector::FromRaw(Method::kGA, std::move(raw), std::move(names));
}

}  // namespace afe::importance
