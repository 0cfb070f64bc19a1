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

#ifndef AFE_DATA_SYNTH_HPP_
#define AFE_DATA_SYNTH_HPP_

#include <cstddef>
#include <cstdint>
#include <span>

#include "afe/data/data_matrix.hpp"

namespace afe::data {

// Fraction of rows whose label is flipped by SynthDataset.
inline constexpr double kSynthLabelNoise = 0.03;

// Planted-signal binary dataset. Columns f0..f{informative-1} are informative
// and take values in {-2.5, -1.5, ..., 2.5}; the remaining `noise` columns are
// standard normal and independent of the label. The clean label is
// SynthLabel(row); exactly floor(kSynthLabelNoise * n) rows are flipped.
DataMatrix SynthDataset(std::size_t n, std::size_t informative, std::size_t noise,
                        std::uint64_t seed);

// Clean label: 1 when the informative columns sum above zero. A zero sum is
// decided by the sign of the first column.
int SynthLabel(std::span<const double> row, std::size_t informative);

}  // namespace afe::data

#endif  // AFE_DATA_SYNTH_HPP_
