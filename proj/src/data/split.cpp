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

#include "afe/data/split.hpp"

#include <algorithm>
#include <cmath>

#include "afe/common/errors.hpp"
#include "afe/common/rng.hpp"

namespace afe::data {

SplitPair StratifiedSplit(const DataMatrix& d, double ratio, std::uint64_t seed) {
  if (!(ratio > 0.0 && ratio < 1.0)) {
    throw ConfigError("split ratio must lie in (0, 1), got " + std::to_string(ratio));
  }
  std::vector<std::vector<std::size_t>> by_class(static_cast<std::size_t>(d.n_classes));
  for (std::size_t i = 0; i < d.rows(); ++i) {
    by_class.at(static_cast<std::size_t>(d.labels[i])).push_back(i);
  }

  SplitPair out;
  out.seed = seed;
  out.ratio = ratio;
  for (std::size_t c = 0; c < by_class.size(); ++c) {
    auto& rows = by_class[c];
    if (rows.empty()) continue;
    if (rows.size() < 2) {
      throw DataError("class " + std::to_string(c) +
                      " has a single sample; cannot stratify");
    }
    Rng rng(seed, "stratified_split", c);
    rng.Shuffle(std::span<std::size_t>(rows));
    const auto n = static_cast<double>(rows.size());
    auto n_test = static_cast<std::size_t>(std::llround(n * (1.0 - ratio)));
    n_test = std::clamp<std::size_t>(n_test, 1, rows.size() - 1);
    out.test_rows.insert(out.test_rows.end(), rows.begin(),
                         rows.begin() + static_cast<std::ptrdiff_t>(n_test));
    out.train_rows.insert(out.train_rows.end(),
                          rows.begin() + static_cast<std::ptrdiff_t>(n_test), rows.end());
  }
  std::sort(out.train_rows.begin(), out.train_rows.end());
  std::sort(out.test_rows.begin(), out.test_rows.end());
  out.train = d.SelectRows(out.train_rows);
  out.test = d.SelectRows(out.test_rows);
  return out;
}

}  // namespace afe::data
