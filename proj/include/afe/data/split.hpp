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

#ifndef AFE_DATA_SPLIT_HPP_
#define AFE_DATA_SPLIT_HPP_

#include <cstdint>
#include <vector>

#include "afe/data/data_matrix.hpp"

namespace afe::data {

struct SplitPair {
  DataMatrix train;
  DataMatrix test;
  std::uint64_t seed = 0;
  double ratio = 0.7;
  // Source row indices, ascending.
  std::vector<std::size_t> train_rows;
  std::vector<std::size_t> test_rows;
};

// Stratified, seeded partition. `ratio` is the training fraction. Each class
// contributes round(n_c * (1 - ratio)) rows to the test side, clamped so both
// sides keep at least one row of every class. Row order is preserved inside
// each side.
SplitPair StratifiedSplit(const DataMatrix& d, double ratio, std::uint64_t seed);

}  // namespace afe::data

#endif  // AFE_DATA_SPLIT_HPP_
