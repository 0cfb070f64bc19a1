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

#include "afe/data/synth.hpp"

#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include "afe/common/errors.hpp"
#include "afe/common/rng.hpp"

namespace afe::data {

int SynthLabel(std::span<const double> row, std::size_t informative) {
  double sum = 0.0;
  for (std::size_t j = 0; j < informative; ++j) sum += row[j];
  if (sum == 0.0) return row[0] > 0.0 ? 1 : 0;
  return sum > 0.0 ? 1 : 0;
}

DataMatrix SynthDataset(std::size_t n, std::size_t informative, std::size_t noise,
                        std::uint64_t seed) {
  if (informative < 1) throw ConfigError("synth: informative must be >= 1");
  if (n < 4 * (informative + noise)) {
    throw ConfigError("synth: need n >= 4 * (informative + noise)");
  }
  const std::size_t p = informative + noise;

  DataMatrix d;
  d.features.resize(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(p));
  for (std::size_t j = 0; j < p; ++j) d.feature_names.push_back("f" + std::to_string(j));
  d.n_classes = 2;
  d.class_names = {"0", "1"};
  d.label_name = "label";
  d.labels.resize(n);

  // One stream per column keeps columns independent of each other's width.
  for (std::size_t j = 0; j < p; ++j) {
    Rng rng(seed, "synth_column", j);
    for (std::size_t i = 0; i < n; ++i) {
      d.features(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          j < informative ? static_cast<double>(rng.UniformInt(6)) - 2.5 : rng.Normal();
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    d.labels[i] = SynthLabel(RowSpan(d.features, static_cast<Eigen::Index>(i)), informative);
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  Rng flip_rng(seed, "synth_label_noise");
  flip_rng.Shuffle(std::span<std::size_t>(order));
  const auto flips = static_cast<std::size_t>(std::floor(kSynthLabelNoise * static_cast<double>(n)));
  for (std::size_t k = 0; k < flips; ++k) d.labels[order[k]] ^= 1;
  return d;
}

}  // namespace afe::data
