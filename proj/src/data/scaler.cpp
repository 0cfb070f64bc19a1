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

#include "afe/data/scaler.hpp"

#include <algorithm>
#include <cmath>

#include "afe/common/errors.hpp"

namespace afe::data {

ScalerParams FitStandardize(const DataMatrix& train) {
  if (train.rows() == 0) throw DataError("cannot fit a scaler on zero rows");
  const auto n = static_cast<double>(train.rows());
  ScalerParams p;
  for (Eigen::Index c = 0; c < train.features.cols(); ++c) {
    const auto col = train.features.col(c);
    const double mean = col.sum() / n;
    const double var = (col.array() - mean).square().sum() / n;
    const double sd = std::sqrt(var);
    p.mean.push_back(mean);
    p.stddev.push_back(sd);
    // Constant columns leave rounding residue in `sd`; treat those as zero.
    p.passthrough.push_back(sd <= 1e-12 * std::max(1.0, std::abs(mean)));
  }
  return p;
}

DataMatrix ApplyStandardize(const DataMatrix& d, const ScalerParams& params) {
  if (params.mean.size() != d.cols()) {
    throw DataError("scaler fitted on " + std::to_string(params.mean.size()) +
                    " columns, data has " + std::to_string(d.cols()));
  }
  DataMatrix out = d;
  for (std::size_t c = 0; c < d.cols(); ++c) {
    if (params.passthrough[c]) continue;
    auto col = out.features.col(static_cast<Eigen::Index>(c));
    col = (col.array() - params.mean[c]) / params.stddev[c];
  }
  return out;
}

}  // namespace afe::data
