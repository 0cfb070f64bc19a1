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

#ifndef AFE_METRICS_METRICS_HPP_
#define AFE_METRICS_METRICS_HPP_

#include <span>
#include <string>
#include <vector>

namespace afe::metrics {

// Binary tasks score class 1 ("disease present"); multiclass tasks use
// unweighted macro averages. A zero denominator yields 0.
struct MetricsReport {
  double accuracy = 0.0;
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  // confusion[true][pred]
  std::vector<std::vector<long>> confusion;
  // "1" for binary tasks, "macro" otherwise.
  std::string positive_label;
};

MetricsReport Evaluate(std::span<const int> y_true, std::span<const int> y_pred,
                       int n_classes);

// Fraction of equal entries. Same preconditions as Evaluate.
double Accuracy(std::span<const int> y_true, std::span<const int> y_pred);

// Number of equal entries.
long CountCorrect(std::span<const int> y_true, std::span<const int> y_pred);

}  // namespace afe::metrics

#endif  // AFE_METRICS_METRICS_HPP_
