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

#ifndef AFE_MODELS_TREE_HPP_
#define AFE_MODELS_TREE_HPP_

#include <cstddef>
#include <functional>
#include <set>
#include <span>
#include <vector>

#include "afe/common/matrix.hpp"
#include "afe/common/rng.hpp"
#include "afe/models/classifier.hpp"

namespace afe::models {

// Binary tree in preorder. A row goes left when row[feature] <= threshold.
// Leaves have feature == -1. Each node owns `value_width` values: the class
// distribution for classification trees, a single output for regression.
class Tree {
 public:
  struct Node {
    int feature = -1;
    double threshold = 0.0;
    int left = -1;
    int right = -1;
  };

  explicit Tree(std::size_t value_width) : value_width_(value_width) {}

  std::size_t AddNode(const Node& node, std::span<const double> value);
  void SetSplit(std::size_t id, const Node& node) { nodes_[id] = node; }

  std::span<const Node> nodes() const { return nodes_; }
  const Node& node(std::size_t i) const { return nodes_[i]; }
  std::span<const double> value(std::size_t i) const {
    return {values_.data() + i * value_width_, value_width_};
  }
  std::span<double> mutable_value(std::size_t i) {
    return {values_.data() + i * value_width_, value_width_};
  }
  std::size_t value_width() const { return value_width_; }
  bool IsLeaf(std::size_t i) const { return nodes_[i].feature < 0; }

  std::size_t Leaf(std::span<const double> row) const;

  // Features used by at least one split.
  std::set<std::size_t> SplitFeatures() const;
  std::size_t Depth() const;

 private:
  std::size_t value_width_;
  std::vector<Node> nodes_;
  std::vector<double> values_;
};

struct ClassificationTreeOptions {
  SplitCriterion criterion = SplitCriterion::kEntropy;
  int max_depth = 0;  // 0 = unlimited
  int min_samples_split = 2;
  // Features examined per split; 0 or >= p means all, in index order.
  std::size_t max_features = 0;
};

// Grows a tree on `rows` (duplicates allowed, which is how bootstrap
// multiplicities enter). Leaves hold class fractions. Ties between candidate
// splits keep the lowest feature index, then the lowest threshold. `rng` is
// only consulted when max_features restricts the candidates.
Tree BuildClassificationTree(const Matrix& x, std::span<const int> y, int n_classes,
                             std::vector<std::size_t> rows,
                             const ClassificationTreeOptions& options, Rng* rng);

// Least-squares regression tree (Friedman's improvement criterion). After
// growth, each leaf's value is replaced by leaf_value(rows reaching it).
Tree BuildRegressionTree(
    const Matrix& x, std::span<const double> target, std::vector<std::size_t> rows,
    int max_depth, int min_samples_split,
    const std::function<double(std::span<const std::size_t>)>& leaf_value);

// Read access to tree-backed models. The attribution engine uses this to
// evaluate many background substitutions per tree walk.
class TreeEnsembleView {
 public:
  enum class Aggregation {
    kMeanDistribution,  // probability = mean of leaf class fractions
    kMajorityVote,      // probability = fraction of trees voting for the class
  };
  virtual ~TreeEnsembleView() = default;
  virtual std::span<const Tree> trees() const = 0;
  virtual Aggregation aggregation() const = 0;
};

class DecisionTreeModel final : public Model, public TreeEnsembleView {
 public:
  DecisionTreeModel(ClassifierSpec spec, std::size_t feature_count, int class_count,
                    Tree tree)
      : Model(std::move(spec), feature_count, class_count) {
    tree_.push_back(std::move(tree));
  }

  const Tree& tree() const { return tree_[0]; }
  std::span<const Tree> trees() const override { return tree_; }
  Aggregation aggregation() const override { return Aggregation::kMeanDistribution; }

 protected:
  Matrix DoPredictProba(const Matrix& x) const override;

 private:
  std::vector<Tree> tree_;
};

TrainedModel TrainDecisionTree(const ClassifierSpec& spec, const data::DataMatrix& d);

}  // namespace afe::models

#endif  // AFE_MODELS_TREE_HPP_
