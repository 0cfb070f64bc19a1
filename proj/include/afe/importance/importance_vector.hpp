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

#ifndef AFE_IMPORTANCE_IMPORTANCE_VECTOR_HPP_
#define AFE_IMPORTANCE_IMPORTANCE_VECTOR_HPP_

#include <string>
#include <string_view>
#include <vector>

namespace afe::importance {

enum class Method { kPCT, kSHAP, kGA, kAFE };

// "PCT", "SHAP", "GA", "AFE".
std::string_view MethodName(Method method);

// Per-feature scores. `scores` are nonnegative and sum to one; `raw_scores`
// keep the engine's native scale (and sign).
struct ImportanceVector {
  Method method = Method::kPCT;
  std::vector<double> scores;
  std::vector<double> raw_scores;
  std::vector<std::string> feature_names;
  // Set when every raw score was <= 0 and `scores` fell back to 1/p.
  bool uniform_fallback = false;

  std::size_t size() const { return scores.size(); }

  // Clips negatives to zero and rescales to unit sum.
  static ImportanceVector FromRaw(Method method, std::vector<double> raw,
                                  std::vector<std::string> names);
};

// Feature indices by descending score; equal scores keep index order.
std::vector<std::size_t> RankDescending(const std::vector<double>& scores);

}  // namespace afe::importance

#endif  // AFE_IMPORTANCE_IMPORTANCE_VECTOR_HPP_
