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

#include "afe/importance/importance_vector.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "afe/common/errors.hpp"

namespace afe::importance {

std::string_view MethodName(Method method) {
  switch (method) {
    case Method::kPCT: return "PCT";
    case Method::kSHAP: return "SHAP";
    case Method::kGA: return "GA";
    case Method::kAFE: return "AFE";
  }
  return "?";
}

ImportanceVector ImportanceVector::FromRaw(Method method, std::vector<double> raw,
                                           std::vector<std::string> names) {
  if (raw.size() != names.size()) {
    throw ConfigError("importance has " + std::to_string(raw.size()) + " scores but " +
                      std::to_string(names.size()) + " names");
  }
  if (raw.empty()) throw ConfigError("importance vector is empty");
  ImportanceVector v;
  v.method = method;
  v.scores.resize(raw.size());
  double total = 0.0;
  for (std::size_t j = 0; j < raw.size(); ++j) {
    if (!std::isfinite(raw[j])) throw DataError("non-finite importance score");
    v.scores[j] = std::max(raw[j], 0.0);
    total += v.scores[j];
  }
  if (total > 0.0) {
    for (double& s : v.scores) s /= total;
  } else {
    std::fill(v.scores.begin(), v.scores.end(), 1.0 / static_cast<double>(raw.size()));
    v.uniform_fallback = true;
  }
  v.raw_scores = std::move(raw);
  v.feature_names = std::move(names);
  return v;
}

std::vector<std::size_t> RankDescending(const std::vector<double>& scores) {
  std::vector<std::size_t> order(scores.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return scores[a] > scores[b]; });
  return order;
}

}  // namespace afe::importance
