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

#include "afe/models/tree.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <limits>
#include <numeric>

#include "afe/common/errors.hpp"

namespace afe::models {
namespace {

double Impurity(std::span<const double> counts, double n, SplitCriterion criterion) {
  if (n <= 0.0) return 0.0;
  if (criterion == SplitCriterion::kGini) {
    double sum_sq = 0.0;
    for (const double c : counts) sum_sq += (c / n) * (c / n);
    return 1.0 - sum_sq;
  }
  double h = 0.0;
  for (const double c : counts) {
    if (c > 0.0) {
      const double p = c / n;
      h -= p * std::log2(p);
    }
  }
  return h;
}

// Midpoint that still separates a from b under `x <= threshold`.
double Midpoint(double a, double b) {
  double mid = a / 2.0 + b / 2.0;
  if (mid >= b || !std::isfinite(mid)) mid = a;
  return mid;
}

struct Candidate {
  int feature = -1;
  double threshold = 0.0;
  double score = -std::numeric_limits<double>::infinity();
};

void Partition(const Matrix& x, std::span<const std::size_t> rows, const Candidate& split,
               std::vector<std::size_t>& left, std::vector<std::size_t>& right) {
  for (const std::size_t r : rows) {
    (x(static_cast<Eigen::Index>(r), split.feature) <= split.threshold ? left : right)
        .push_back(r);
  }
}

class ClassificationBuilder {
 public:
  ClassificationBuilder(const Matrix& x, std::span<const int> y, int n_classes,
                        const ClassificationTreeOptions& options, Rng* rng)
      : x_(x), y_(y), k_(static_cast<std::size_t>(n_classes)), options_(options),
        rng_(rng), tree_(k_) {}

  Tree Build(std::span<const std::size_t> rows) {
    Grow(rows, 0);
    return std::move(tree_);
  }

 private:
  void Scan(std::span<const std::size_t> rows, std::size_t feature,
            std::span<const double> parent_counts, double parent_impurity,
            Candidate& best) {
    const auto n = rows.size();
    scratch_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t r = rows[i];
      scratch_[i] = {x_(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(feature)),
                     y_[r]};
    }
    std::sort(scratch_.begin(), scratch_.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    if (scratch_.front().first == scratch_.back().first) return;

    std::vector<double> left(k_, 0.0);
    std::vector<double> right(parent_counts.begin(), parent_counts.end());
    const auto total = static_cast<double>(n);
    for (std::size_t i = 0; i + 1 < n; ++i) {
      const auto c = static_cast<std::size_t>(scratch_[i].second);
      left[c] += 1.0;
      right[c] -= 1.0;
      if (!(scratch_[i].first < scratch_[i + 1].first)) continue;
      const auto nl = static_cast<double>(i + 1);
      const double nr = total - nl;
      const double gain = parent_impurity -
                          (nl / total) * Impurity(left, nl, options_.criterion) -
                          (nr / total) * Impurity(right, nr, options_.criterion);
      if (gain > best.score) {
        best = {static_cast<int>(feature),
                Midpoint(scratch_[i].first, scratch_[i + 1].first), gain};
      }
    }
  }

  Candidate FindSplit(std::span<const std::size_t> rows, std::span<const double> counts,
                      double impurity) {
    const auto p = static_cast<std::size_t>(x_.cols());
    Candidate best;
    if (options_.max_features == 0 || options_.max_features >= p || rng_ == nullptr) {
      for (std::size_t f = 0; f < p; ++f) Scan(rows, f, counts, impurity, best);
      return best;
    }
    std::vector<std::size_t> order(p);
    std::iota(order.begin(), order.end(), 0);
    rng_->Shuffle(std::span<std::size_t>(order));
    const auto m = static_cast<std::ptrdiff_t>(options_.max_features);
    std::vector<std::size_t> sampled(order.begin(), order.begin() + m);
    std::sort(sampled.begin(), sampled.end());
    for (const std::size_t f : sampled) Scan(rows, f, counts, impurity, best);
    // Keep drawing while every inspected feature is constant on this node.
    for (std::size_t k = options_.max_features; best.feature < 0 && k < p; ++k) {
      Scan(rows, order[k], counts, impurity, best);
    }
    return best;
  }

  std::size_t Grow(std::span<const std::size_t> rows, int depth) {
    std::vector<double> counts(k_, 0.0);
    for (const std::size_t r : rows) counts[static_cast<std::size_t>(y_[r])] += 1.0;
    const auto n = static_cast<double>(rows.size());
    std::vector<double> dist(k_);
    for (std::size_t c = 0; c < k_; ++c) dist[c] = counts[c] / n;
    const std::size_t id = tree_.AddNode({}, dist);

    const bool pure =
        std::any_of(counts.begin(), counts.end(), [n](double c) { return c == n; });
    if (pure || rows.size() < static_cast<std::size_t>(options_.min_samples_split) ||
        (options_.max_depth > 0 && depth >= options_.max_depth)) {
      return id;
    }
    const Candidate split = FindSplit(rows, counts, Impurity(counts, n, options_.criterion));
    if (split.feature < 0) return id;

    std::vector<std::size_t> left_rows;
    std::vector<std::size_t> right_rows;
    Partition(x_, rows, split, left_rows, right_rows);
    const std::size_t left = Grow(left_rows, depth + 1);
    const std::size_t right = Grow(right_rows, depth + 1);
    tree_.SetSplit(id, {split.feature, split.threshold, static_cast<int>(left),
                        static_cast<int>(right)});
    return id;
  }

  const Matrix& x_;
  std::span<const int> y_;
  std::size_t k_;
  ClassificationTreeOptions options_;
  Rng* rng_;
  Tree tree_;
  std::vector<std::pair<double, int>> scratch_;
};

class RegressionBuilder {
 public:
  RegressionBuilder(const Matrix& x, std::span<const double> target, int max_depth,
                    int min_samples_split,
                    const std::function<double(std::span<const std::size_t>)>& leaf_value)
      : x_(x), target_(target), max_depth_(max_depth),
        min_samples_split_(min_samples_split), leaf_value_(leaf_value), tree_(1) {}

  Tree Build(std::span<const std::size_t> rows) {
    Grow(rows, 0);
    return std::move(tree_);
  }

 private:
  std::size_t Grow(std::span<const std::size_t> rows, int depth) {
    const auto n = static_cast<double>(rows.size());
    double sum = 0.0;
    double sum_sq = 0.0;
    for (const std::size_t r : rows) {
      sum += target_[r];
      sum_sq += target_[r] * target_[r];
    }
    const double mean = sum / n;
    const double variance = sum_sq / n - mean * mean;
    const double leaf = leaf_value_(rows);
    const std::size_t id = tree_.AddNode({}, std::span<const double>(&leaf, 1));

    if (rows.size() < static_cast<std::size_t>(min_samples_split_) ||
        (max_depth_ > 0 && depth >= max_depth_) || variance <= DBL_EPSILON) {
      return id;
    }

    Candidate best;
    for (Eigen::Index f = 0; f < x_.cols(); ++f) {
      scratch_.resize(rows.size());
      for (std::size_t i = 0; i < rows.size(); ++i) {
        scratch_[i] = {x_(static_cast<Eigen::Index>(rows[i]), f), target_[rows[i]]};
      }
      std::sort(scratch_.begin(), scratch_.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      double left_sum = 0.0;
      for (std::size_t i = 0; i + 1 < scratch_.size(); ++i) {
        left_sum += scratch_[i].second;
        if (!(scratch_[i].first < scratch_[i + 1].first)) continue;
        const auto nl = static_cast<double>(i + 1);
        const double nr = n - nl;
        const double diff = left_sum / nl - (sum - left_sum) / nr;
        const double improvement = nl * nr / n * diff * diff;
        if (improvement > best.score) {
          best = {static_cast<int>(f), Midpoint(scratch_[i].first, scratch_[i + 1].first),
                  improvement};
        }
      }
    }
    if (best.feature < 0) return id;

    std::vector<std::size_t> left_rows;
    std::vector<std::size_t> right_rows;
    Partition(x_, rows, best, left_rows, right_rows);
    const std::size_t left = Grow(left_rows, depth + 1);
    const std::size_t right = Grow(right_rows, depth + 1);
    tree_.SetSplit(id, {best.feature, best.threshold, static_cast<int>(left),
                        static_cast<int>(right)});
    return id;
  }

  const Matrix& x_;
  std::span<const double> target_;
  int max_depth_;
  int min_samples_split_;
  const std::function<double(std::span<const std::size_t>)>& leaf_value_;
  Tree tree_;
  std::vector<std::pair<double, double>> scratch_;
};

}  // namespace

std::size_t Tree::AddNode(const Node& node, std::span<const double> value) {
  nodes_.push_back(node);
  values_.insert(values_.end(), value.begin(), value.end());
  return nodes_.size() - 1;
}

std::size_t Tree::Leaf(std::span<const double> row) const {
  std::size_t i = 0;
  while (nodes_[i].feature >= 0) {
    const Node& n = nodes_[i];
    i = static_cast<std::size_t>(row[static_cast<std::size_t>(n.feature)] <= n.threshold
                                     ? n.left
                                     : n.right);
  }
  return i;
}

std::set<std::size_t> Tree::SplitFeatures() const {
  std::set<std::size_t> out;
  for (const Node& n : nodes_) {
    if (n.feature >= 0) out.insert(static_cast<std::size_t>(n.feature));
  }
  return out;
}

std::size_t Tree::Depth() const {
  std::vector<std::size_t> depth(nodes_.size(), 0);
  std::size_t deepest = 0;
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    deepest = std::max(deepest, depth[i]);
    if (nodes_[i].feature >= 0) {
      depth[static_cast<std::size_t>(nodes_[i].left)] = depth[i] + 1;
      depth[static_cast<std::size_t>(nodes_[i].right)] = depth[i] + 1;
    }
  }
  return deepest;
}

Tree BuildClassificationTree(const Matrix& x, std::span<const int> y, int n_classes,
                             std::vector<std::size_t> rows,
                             const ClassificationTreeOptions& options, Rng* rng) {
  if (rows.empty()) throw DataError("cannot grow a tree on zero rows");
  return ClassificationBuilder(x, y, n_classes, options, rng).Build(rows);
}

Tree BuildRegressionTree(
    const Matrix& x, std::span<const double> target, std::vector<std::size_t> rows,
    int max_depth, int min_samples_split,
    const std::function<double(std::span<const std::size_t>)>& leaf_value) {
  if (rows.empty()) throw DataError("cannot grow a tree on zero rows");
  return RegressionBuilder(x, target, max_depth, min_samples_split, leaf_value).Build(rows);
}

Matrix DecisionTreeModel::DoPredictProba(const Matrix& x) const {
  Matrix out(x.rows(), class_count());
  for (Eigen::Index r = 0; r < x.rows(); ++r) {
    const auto value = tree().value(tree().Leaf(RowSpan(x, r)));
    for (int c = 0; c < class_count(); ++c) out(r, c) = value[static_cast<std::size_t>(c)];
  }
  return out;
}

TrainedModel TrainDecisionTree(const ClassifierSpec& spec, const data::DataMatrix& d) {
  std::vector<std::size_t> rows(d.rows());
  std::iota(rows.begin(), rows.end(), 0);
  ClassificationTreeOptions options;
  options.criterion = spec.dt.criterion;
  options.max_depth = spec.dt.max_depth;
  options.min_samples_split = spec.dt.min_samples_split;
  Tree tree = BuildClassificationTree(d.features, d.labels, d.n_classes, std::move(rows),
                                      options, nullptr);
  return std::make_shared<DecisionTreeModel>(spec, d.cols(), d.n_classes, std::move(tree));
}

}  // namespace afe::models
