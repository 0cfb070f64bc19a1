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

#include "afe/metrics/metrics.hpp"

#include <string>
#include <tuple>
#include "afe/common/errors.hpp"

namespace afe::metrics {
namespace {

void CheckInputs(std::span<const int> y_true, std::span<const int> y_pred) {
  if (y_true.size() != y_pred.size()) {
    throw ConfigError("label vectors differ in length: " + std::to_string(y_true.size()) +
                      " vs " + std::to_string(y_pred.size()));
  }
  if (y_true.empty()) throw ConfigError("empty label vectors");
}

double SafeDiv(double num, double den) { return den == 0.0 ? 0.0 : num / den; }

double F1(double precision, double recall) {
  return precision + recall == 0.0 ? 0.0
                                   : 2.0 * precision * recall / (precision + recall);
}

}  // namespace

long CountCorrect(std::span<const int> y_true, std::span<const int> y_pred) {
  CheckInputs(y_true, y_pred);
  long correct = 0;
  for (std::size_t i = 0; i < y_true.size(); ++i) correct += y_true[i] == y_pred[i];
  return correct;
}

double Accuracy(std::span<const int> y_true, std::span<const int> y_pred) {
  return static_cast<double>(CountCorrect(y_true, y_pred)) /
         static_cast<double>(y_true.size());
}

MetricsReport Evaluate(std::span<const int> y_true, std::span<const int> y_pred,
                       int n_classes) {
  CheckInputs(y_true, y_pred);
  if (n_classes < 1) throw ConfigError("n_classes must be positive");
  const auto k = static_cast<std::size_t>(n_classes);
  MetricsReport r;
  r.confusion.assign(k, std::vector<long>(k, 0));
  for (std::size_t i = 0; i < y_true.size(); ++i) {
    if (y_true[i] < 0 || y_true[i] >= n_classes || y_pred[i] < 0 ||
        y_pred[i] >= n_classes) {
      throw ConfigError("label out of range at position " + std::to_string(i));
    }
    ++r.confusion[static_cast<std::size_t>(y_true[i])][static_cast<std::size_t>(y_pred[i])];
  }

  long trace = 0;
  for (std::size_t c = 0; c < k; ++c) trace += r.confusion[c][c];
  r.accuracy = static_cast<double>(trace) / static_cast<double>(y_true.size());

  auto class_scores = [&](std::size_t c) {
    long tp = r.confusion[c][c];
    long predicted = 0;
    long actual = 0;
    for (std::size_t o = 0; o < k; ++o) {
      predicted += r.confusion[o][c];
      actual += r.confusion[c][o];
    }
    const double precision = SafeDiv(static_cast<double>(tp), static_cast<double>(predicted));
    const double recall = SafeDiv(static_cast<double>(tp), static_cast<double>(actual));
    return std::pair{precision, recall};
  };

  if (k == 2) {
    std::tie(r.precision, r.recall) = class_scores(1);
    r.f1 = F1(r.precision, r.recall);
    r.positive_label = "1";
    return r;
  }

  for (std::size_t c = 0; c < k; ++c) {
    const auto [p, rc] = class_scores(c);
    r.precision += p;
    r.recall += rc;
    r.f1 += F1(p, rc);
  }
  r.precision /= static_cast<double>(k);
  r.recall /= static_cast<double>(k);
  r.f1 /= static_cast<double>(k);
  r.positive_label = "macro";
  return r;
}

}  // namespace afe::metrics
