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

#ifndef AFE_DATA_SCALER_HPP_
#define AFE_DATA_SCALER_HPP_

#include <vector>

#include "afe/data/data_matrix.hpp"

namespace afe::data {

// Per-column population mean and standard deviation of the training rows.
// Columns with (numerically) zero spread pass through unchanged.
struct ScalerParams {
  std::vector<double> mean;
  std::vector<double> stddev;
  std::vector<bool> passthrough;
};

ScalerParams FitStandardize(const DataMatrix& train);
DataMatrix ApplyStandardize(const DataMatrix& d, const ScalerParams& params);

}  // namespace afe::data

#endif  // AFE_DATA_SCALER_HPP_
