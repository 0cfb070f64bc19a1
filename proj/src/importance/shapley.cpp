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

#include "afe/importance/shapley.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <memory>
#include <numeric>

#include "afe/common/errors.hpp"
#include "afe/common/parallel.hpp"
#include "afe/common/rng.hpp"
#include "afe/models/boosting.hpp"
#include "afe/models/tree.hpp"

namespace afe::importance {
namespace {

using Mask = std::uint64_t;

// Neumaier compensated sum.
struct CompensatedSum {
  double sum = 0.0;
  double carry = 0.0;
  void Add(double v) {
    const double t = sum + v;
    carry += std::abs(sum) >= std::abs(v) ? (sum - t) + v : (v - t) + sum;
    sum = t;
  }
  double Value() const { return sum + carry; }
};

int ExplainedClass(const models::Model& model, std::span<const double> x) {
  if (model.class_count() == 2) return 1;
  Matrix row(1, static_cast<Eigen::Index>(x.size()));
  std::copy(x.begin(), x.end(), row.data());
  return models::ArgMax(RowSpan(model.PredictProba(row), 0));
}

class CoalitionEvaluator {
 public:
  virtual ~CoalitionEvaluator() = default;
  virtual double Value(Mask coalition) const = 0;
};

// Predicts the hybrid background rows directly. Works for any model.
class HybridEvaluator final : public CoalitionEvaluator {
 public:
  HybridEvaluator(const models::Model& model, std::span<const double> x,
                  const BackgroundSet& bg, int target)
      : model_(model), x_(x), bg_(bg), target_(target) {}

  double Value(Mask coalition) const override {
    Matrix hybrid = bg_.rows;
    for (std::size_t j = 0; j < x_.size(); ++j) {
      if ((coalition >> j) & 1U) hybrid.col(static_cast<Eigen::Index>(j)).setConstant(x_[j]);
    }
    return MeanTarget(model_.PredictProba(hybrid), target_);
  }

  static double MeanTarget(const Matrix& proba, int target) {
    double total = 0.0;
    for (Eigen::Index r = 0; r < proba.rows(); ++r) total += proba(r, target);
    return total / static_cast<double>(proba.rows());
  }

 private:
  const models::Model& model_;
  std::span<const double> x_;
  const BackgroundSet& bg_;
  int target_;
};

// Sends the whole background through each tree at once as a bit set. At a
// split on a coalition feature the set follows x; otherwise it is divided by
// the precomputed background directions. Needs at most 64 background rows.
class TreeWalkEvaluator final : public CoalitionEvaluator {
 public:
  TreeWalkEvaluator(const models::TreeEnsembleView& view, std::span<const double> x,
                    const BackgroundSet& bg, int target)
      : trees_(view.trees()) {
    const auto b = static_cast<std::size_t>(bg.rows.rows());
    all_ = b == 64 ? ~Mask{0} : (Mask{1} << b) - 1;
    scale_ = 1.0 / (static_cast<double>(b) * static_cast<double>(trees_.size()));
    const bool vote = view.aggregation() == models::TreeEnsembleView::Aggregation::kMajorityVote;
    for (const models::Tree& tree : trees_) {
      const std::size_t nodes = tree.nodes().size();
      std::vector<Mask> bg_left(nodes, 0);
      std::vector<char> x_left(nodes, 0);
      std::vector<double> leaf(nodes, 0.0);
      for (std::size_t i = 0; i < nodes; ++i) {
        const auto& node = tree.node(i);
        if (tree.IsLeaf(i)) {
          const auto dist = tree.value(i);
          leaf[i] = vote ? (models::ArgMax(dist) == target ? 1.0 : 0.0)
                         : dist[static_cast<std::size_t>(target)];
          continue;
        }
        const auto f = static_cast<Eigen::Index>(node.feature);
        for (std::size_t r = 0; r < b; ++r) {
          if (bg.rows(static_cast<Eigen::Index>(r), f) <= node.threshold) bg_left[i] |= Mask{1} << r;
        }
        x_left[i] = x[static_cast<std::size_t>(node.feature)] <= node.threshold;
      }
      bg_left_.push_back(std::move(bg_left));
      x_left_.push_back(std::move(x_left));
      leaf_.push_back(std::move(leaf));
    }
  }

  double Value(Mask coalition) const override {
    double total = 0.0;
    for (std::size_t t = 0; t < trees_.size(); ++t) total += Walk(t, 0, all_, coalition);
    return total * scale_;
  }

 private:
  double Walk(std::size_t t, std::size_t i, Mask rows, Mask coalition) const {
    const models::Tree& tree = trees_[t];
    if (tree.IsLeaf(i)) return static_cast<double>(std::popcount(rows)) * leaf_[t][i];
    const auto& node = tree.node(i);
    const auto left = static_cast<std::size_t>(node.left);
    const auto right = static_cast<std::size_t>(node.right);
    if ((coalition >> node.feature) & 1U) {
      return Walk(t, x_left_[t][i] ? left : right, rows, coalition);
    }
    const Mask l = rows & bg_left_[t][i];
    const Mask r = rows & ~bg_left_[t][i];
    double out = 0.0;
    if (l != 0) out += Walk(t, left, l, coalition);
    if (r != 0) out += Walk(t, right, r, coalition);
    return out;
  }

  std::span<const models::Tree> trees_;
  Mask all_ = 0;
  double scale_ = 0.0;
  std::vector<std::vector<Mask>> bg_left_;
  std::vector<std::vector<char>> x_left_;
  std::vector<std::vector<double>> leaf_;
};

// Boosted trees are shallow, so each tree's output on a hybrid row depends
// on only a handful of coalition bits. Leaf values are tabulated per tree
// for every pattern of its own split features; the scores are then summed in
// the same order as the model's own prediction.
class BoostingEvaluator final : public CoalitionEvaluator {
 public:
  static constexpr std::size_t kMaxTreeFeatures = 10;

  static std::unique_ptr<BoostingEvaluator> Make(const models::BoostingModel& model,
                                                 std::span<const double> x,
                                                 const BackgroundSet& bg, int target) {
    for (const auto& tree : model.trees()) {
      if (tree.SplitFeatures().size() > kMaxTreeFeatures) return nullptr;
    }
    return std::unique_ptr<BoostingEvaluator>(new BoostingEvaluator(model, x, bg, target));
  }

  double Value(Mask coalition) const override {
    const auto w = static_cast<Eigen::Index>(model_.width());
    Eigen::MatrixXd scores(b_, w);
    scores.rowwise() = model_.init().transpose();
    for (std::size_t t = 0; t < features_.size(); ++t) {
      std::size_t pattern = 0;
      for (std::size_t k = 0; k < features_[t].size(); ++k) {
        if ((coalition >> features_[t][k]) & 1U) pattern |= std::size_t{1} << k;
      }
      const double* leaf = table_[t].data() + pattern * static_cast<std::size_t>(b_);
      const auto c = static_cast<Eigen::Index>(t % model_.width());
      for (Eigen::Index r = 0; r < b_; ++r) scores(r, c) += leaf[r];
    }
    return HybridEvaluator::MeanTarget(model_.ProbaFromScores(std::move(scores)), target_);
  }

 private:
  BoostingEvaluator(const models::BoostingModel& model, std::span<const double> x,
                    const BackgroundSet& bg, int target)
      : model_(model), b_(bg.rows.rows()), target_(target) {
    std::vector<double> row(x.size());
    for (const auto& tree : model.trees()) {
      const auto used = tree.SplitFeatures();
      std::vector<std::size_t> feats(used.begin(), used.end());
      const std::size_t patterns = std::size_t{1} << feats.size();
      std::vector<double> table(patterns * static_cast<std::size_t>(b_));
      for (std::size_t pattern = 0; pattern < patterns; ++pattern) {
        for (Eigen::Index r = 0; r < b_; ++r) {
          for (std::size_t k = 0; k < feats.size(); ++k) {
            const std::size_t f = feats[k];
            row[f] = ((pattern >> k) & 1U) ? x[f] : bg.rows(r, static_cast<Eigen::Index>(f));
          }
          table[pattern * static_cast<std::size_t>(b_) + static_cast<std::size_t>(r)] =
              tree.value(tree.Leaf(row))[0];
        }
      }
      features_.push_back(std::move(feats));
      table_.push_back(std::move(table));
    }
  }

  const models::BoostingModel& model_;
  Eigen::Index b_;
  int target_;
  std::vector<std::vector<std::size_t>> features_;
  std::vector<std::vector<double>> table_;
};

std::unique_ptr<CoalitionEvaluator> MakeEvaluator(const models::Model& model,
                                                  std::span<const double> x,
                                                  const BackgroundSet& bg,
                                                  const ShapOptions& options) {
  const int target = ExplainedClass(model, x);
  if (options.tree_fast_path && bg.rows.rows() <= 64) {
    if (const auto* view = dynamic_cast<const models::TreeEnsembleView*>(&model)) {
      return std::make_unique<TreeWalkEvaluator>(*view, x, bg, target);
    }
    if (const auto* gb = dynamic_cast<const models::BoostingModel*>(&model)) {
      if (auto e = BoostingEvaluator::Make(*gb, x, bg, target)) return e;
    }
  }
  return std::make_unique<HybridEvaluator>(model, x, bg, target);
}

void CheckInputs(const models::Model& model, std::span<const double> x,
                 const BackgroundSet& bg) {
  if (bg.rows.rows() == 0) throw ConfigError("background set is empty");
  if (static_cast<std::size_t>(bg.rows.cols()) != model.feature_count()) {
    throw ConfigError("background has " + std::to_string(bg.rows.cols()) +
                      " columns, model expects " + std::to_string(model.feature_count()));
  }
  if (x.size() != model.feature_count()) {
    throw ConfigError("instance has " + std::to_string(x.size()) + " values, model expects " +
                      std::to_string(model.feature_count()));
  }
}

double Checked(double v) {
  if (!std::isfinite(v)) throw DataError("non-finite model output in coalition value");
  return v;
}

// All 2^p coalition values, indexed by bit mask.
std::vector<double> CoalitionTable(const CoalitionEvaluator& eval, std::size_t p) {
  const std::size_t full = std::size_t{1} << p;
  std::vector<double> values(full);
  const std::size_t chunk = 256;
  const std::size_t chunks = (full + chunk - 1) / chunk;
  ParallelFor(chunks, [&](std::size_t c) {
    const std::size_t end = std::min(full, (c + 1) * chunk);
    for (std::size_t m = c * chunk; m < end; ++m) values[m] = Checked(eval.Value(m));
  });
  return values;
}

void CheckCap(std::size_t p, std::size_t cap, const char* what) {
  if (p == 0) throw ConfigError("cannot explain a model without features");
  if (p > cap) {
    throw ConfigError(std::string(what) + " is capped at " + std::to_string(cap) +
                      " features, model has " + std::to_string(p));
  }
}

}  // namespace

BackgroundSet BackgroundSet::Sample(const Matrix& train, std::size_t cap, std::uint64_t seed) {
  if (cap == 0) throw ConfigError("background size must be positive");
  if (train.rows() == 0) throw DataError("cannot sample a background from zero rows");
  const auto n = static_cast<std::size_t>(train.rows());
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  if (cap < n) {
    Rng rng(seed, "shap_background");
    rng.Shuffle(std::span<std::size_t>(idx));
    idx.resize(cap);
    std::sort(idx.begin(), idx.end());
  }
  return {SelectRows(train, idx), Source::kTrainSample};
}

BackgroundSet BackgroundSet::FromRows(Matrix rows) {
  if (rows.rows() == 0) throw ConfigError("background set is empty");
  return {std::move(rows), Source::kUserSupplied};
}

double CoalitionValue(const models::Model& model, std::span<const double> x,
                      const FeatureSet& coalition, const BackgroundSet& bg,
                      const ShapOptions& options) {
  CheckInputs(model, x, bg);
  const std::size_t p = x.size();
  if (p > 63) throw ConfigError("coalition values support at most 63 features");
  Mask mask = 0;
  for (const std::size_t j : coalition) {
    if (j >= p) {
      throw ConfigError("coalition index " + std::to_string(j) + " out of range for " +
                        std::to_string(p) + " features");
    }
    mask |= Mask{1} << j;
  }
  return Checked(MakeEvaluator(model, x, bg, options)->Value(mask));
}

ShapExplanation ShapleyExact(const models::Model& model, std::span<const double> x,
                             const BackgroundSet& bg, const ShapOptions& options) {
  CheckInputs(model, x, bg);
  const std::size_t p = x.size();
  CheckCap(p, kMaxExactShapleyFeatures, "exact Shapley");
  const auto eval = MakeEvaluator(model, x, bg, options);
  const std::size_t full = std::size_t{1} << p;

  std::vector<double> table;
  if (options.cache_coalitions) table = CoalitionTable(*eval, p);
  auto value = [&](Mask m) { return options.cache_coalitions ? table[m] : Checked(eval->Value(m)); };

  // |S|!(p-|S|-1)!/p! = 1 / (p * C(p-1, |S|)).
  std::vector<double> weight(p);
  double binom = 1.0;
  for (std::size_t s = 0; s < p; ++s) {
    weight[s] = 1.0 / (static_cast<double>(p) * binom);
    binom = binom * static_cast<double>(p - 1 - s) / static_cast<double>(s + 1);
  }

  ShapExplanation out;
  out.phi.resize(p);
  ParallelFor(p, [&](std::size_t i) {
    const Mask bit = Mask{1} << i;
    CompensatedSum acc;
    for (Mask m = 0; m < full; ++m) {
      if (m & bit) continue;
      acc.Add(weight[static_cast<std::size_t>(std::popcount(m))] * (value(m | bit) - value(m)));
    }
    out.phi[i] = acc.Value();
  });
  out.base_value = value(0);
  out.fx_full = value(full - 1);
  return out;
}

ShapExplanation ShapleyPermutationForm(const models::Model& model, std::span<const double> x,
                                       const BackgroundSet& bg, const ShapOptions& options) {
  CheckInputs(model, x, bg);
  const std::size_t p = x.size();
  CheckCap(p, kMaxPermutationShapleyFeatures, "permutation-form Shapley");
  // p! * p lookups; always tabulate.
  const std::vector<double> table = CoalitionTable(*MakeEvaluator(model, x, bg, options), p);

  std::vector<CompensatedSum> acc(p);
  std::vector<std::size_t> order(p);
  std::iota(order.begin(), order.end(), 0);
  double orderings = 0.0;
  do {
    Mask m = 0;
    for (const std::size_t j : order) {
      const Mask next = m | (Mask{1} << j);
      acc[j].Add(table[next] - table[m]);
      m = next;
    }
    orderings += 1.0;
  } while (std::next_permutation(order.begin(), order.end()));

  ShapExplanation out;
  out.phi.resize(p);
  for (std::size_t j = 0; j < p; ++j) out.phi[j] = acc[j].Value() / orderings;
  out.base_value = table.front();
  out.fx_full = table.back();
  return out;
}

std::vector<std::size_t> ShapSampleRows(std::size_t rows, std::size_t sample_cap,
                                        std::uint64_t seed) {
  if (sample_cap == 0) throw ConfigError("SHAP sample cap must be positive");
  std::vector<std::size_t> idx(rows);
  std::iota(idx.begin(), idx.end(), 0);
  if (sample_cap < rows) {
    Rng rng(seed, "shap_sample");
    rng.Shuffle(std::span<std::size_t>(idx));
    idx.resize(sample_cap);
    std::sort(idx.begin(), idx.end());
  }
  return idx;
}

ImportanceVector MeanAbsShap(const models::Model& model, const data::DataMatrix& eval_rows,
                             const BackgroundSet& bg, std::size_t sample_cap,
                             std::uint64_t seed, const ShapOptions& options) {
  if (eval_rows.rows() == 0) throw DataError("SHAP importance needs at least one row");
  const auto rows = ShapSampleRows(eval_rows.rows(), sample_cap, seed);
  std::vector<ShapExplanation> explanations(rows.size());
  ParallelFor(rows.size(), [&](std::size_t k) {
    explanations[k] = ShapleyExact(
        model, RowSpan(eval_rows.features, static_cast<Eigen::Index>(rows[k])), bg, options);
    explanations[k].instance_index = rows[k];
  });

  const std::size_t p = eval_rows.cols();
  std::vector<double> raw(p, 0.0);
  for (const auto& e : explanations) {
    for (std::size_t j = 0; j < p; ++j) raw[j] += std::abs(e.phi[j]);
  }
  for (double& r : raw) r /= static_cast<double>(rows.size());
  return ImportanceVector::FromRaw(Method::kSHAP, std::move(raw), eval_rows.feature_names);
}

}  // namespace afe::importance
