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

#include "afe/models/classifier.hpp"

#include <algorithm>

#include "json.hpp"

#include "afe/common/errors.hpp"
#include "afe/models/boosting.hpp"
#include "afe/models/forest.hpp"
#include "afe/models/logistic.hpp"
#include "afe/models/mlp.hpp"
#include "afe/models/naive_bayes.hpp"
#include "afe/models/tree.hpp"

namespace afe::models {
namespace {

using nlohmann::json;

std::string_view CriterionName(SplitCriterion c) {
  return c == SplitCriterion::kGini ? "gini" : "entropy";
}

SplitCriterion ParseCriterion(const std::string& s) {
  if (s == "gini") return SplitCriterion::kGini;
  if (s == "entropy") return SplitCriterion::kEntropy;
  throw ConfigError("unknown split criterion '" + s + "'");
}

json ParamsToJson(const ClassifierSpec& s) {
  switch (s.kind) {
    case Kind::kLR:
      return {{"l2", s.lr.l2}, {"max_iter", s.lr.max_iter}, {"grad_tol", s.lr.grad_tol}};
    case Kind::kDT:
      return {{"criterion", CriterionName(s.dt.criterion)},
              {"max_depth", s.dt.max_depth},
              {"min_samples_split", s.dt.min_samples_split}};
    case Kind::kGNB:
      return {{"var_smoothing", s.gnb.var_smoothing}};
    case Kind::kRF:
      return {{"n_trees", s.rf.n_trees},
              {"bootstrap", s.rf.bootstrap},
              {"max_features", s.rf.max_features},
              {"criterion", CriterionName(s.rf.criterion)},
              {"max_depth", s.rf.max_depth},
              {"min_samples_split", s.rf.min_samples_split}};
    case Kind::kMLP:
      return {{"hidden", s.mlp.hidden},
              {"learning_rate", s.mlp.learning_rate},
              {"beta1", s.mlp.beta1},
              {"beta2", s.mlp.beta2},
              {"epsilon", s.mlp.epsilon},
              {"batch_size", s.mlp.batch_size},
              {"epochs", s.mlp.epochs},
              {"alpha", s.mlp.alpha},
              {"tol", s.mlp.tol},
              {"n_iter_no_change", s.mlp.n_iter_no_change}};
    case Kind::kGB:
      return {{"n_stages", s.gb.n_stages},
              {"max_depth", s.gb.max_depth},
              {"learning_rate", s.gb.learning_rate},
              {"min_samples_split", s.gb.min_samples_split}};
  }
  return json::object();
}

template <typename T>
void Read(const json& params, const char* key, T& out) {
  if (params.contains(key)) out = params.at(key).get<T>();
}

void ReadCriterion(const json& params, SplitCriterion& out) {
  if (params.contains("criterion")) out = ParseCriterion(params.at("criterion").get<std::string>());
}

}  // namespace

std::string_view KindName(Kind kind) {
  switch (kind) {
    case Kind::kLR: return "lr";
    case Kind::kDT: return "dt";
    case Kind::kGNB: return "gnb";
    case Kind::kRF: return "rf";
    case Kind::kMLP: return "mlp";
    case Kind::kGB: return "gb";
  }
  return "?";
}

std::string_view KindLabel(Kind kind) {
  switch (kind) {
    case Kind::kLR: return "LR";
    case Kind::kDT: return "DT";
    case Kind::kGNB: return "GNB";
    case Kind::kRF: return "RF";
    case Kind::kMLP: return "MLP";
    case Kind::kGB: return "GB";
  }
  return "?";
}

Kind ParseKind(std::string_view token) {
  std::string lower(token);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  for (const Kind k : kAllKinds) {
    if (KindName(k) == lower) return k;
  }
  throw ConfigError("unknown model '" + std::string(token) +
                    "' (expected lr|dt|gnb|rf|mlp|gb)");
}

ClassifierSpec ClassifierSpec::Default(Kind kind, std::uint64_t seed) {
  ClassifierSpec s;
  s.kind = kind;
  s.seed = seed;
  return s;
}

void ClassifierSpec::Validate() const {
  auto require = [](bool ok, const char* what) {
    if (!ok) throw ConfigError(std::string("invalid hyperparameter: ") + what);
  };
  switch (kind) {
    case Kind::kLR:
      require(lr.l2 >= 0.0, "lr.l2 >= 0");
      require(lr.max_iter >= 1, "lr.max_iter >= 1");
      require(lr.grad_tol > 0.0, "lr.grad_tol > 0");
      break;
    case Kind::kDT:
      require(dt.max_depth >= 0, "dt.max_depth >= 0");
      require(dt.min_samples_split >= 2, "dt.min_samples_split >= 2");
      break;
    case Kind::kGNB:
      require(gnb.var_smoothing >= 0.0, "gnb.var_smoothing >= 0");
      break;
    case Kind::kRF:
      require(rf.n_trees >= 1, "rf.n_trees >= 1");
      require(rf.max_features >= 0, "rf.max_features >= 0");
      require(rf.max_depth >= 0, "rf.max_depth >= 0");
      require(rf.min_samples_split >= 2, "rf.min_samples_split >= 2");
      break;
    case Kind::kMLP:
      require(mlp.hidden >= 1, "mlp.hidden >= 1");
      require(mlp.learning_rate > 0.0, "mlp.learning_rate > 0");
      require(mlp.batch_size >= 1, "mlp.batch_size >= 1");
      require(mlp.epochs >= 1, "mlp.epochs >= 1");
      require(mlp.alpha >= 0.0, "mlp.alpha >= 0");
      require(mlp.beta1 >= 0.0 && mlp.beta1 < 1.0, "mlp.beta1 in [0,1)");
      require(mlp.beta2 >= 0.0 && mlp.beta2 < 1.0, "mlp.beta2 in [0,1)");
      require(mlp.epsilon > 0.0, "mlp.epsilon > 0");
      break;
    case Kind::kGB:
      require(gb.n_stages >= 1, "gb.n_stages >= 1");
      require(gb.max_depth >= 1, "gb.max_depth >= 1");
      require(gb.learning_rate > 0.0, "gb.learning_rate > 0");
      require(gb.min_samples_split >= 2, "gb.min_samples_split >= 2");
      break;
  }
}

std::string ClassifierSpec::ToJsonText() const {
  const json doc = {{"kind", KindName(kind)}, {"seed", seed}, {"params", ParamsToJson(*this)}};
  return doc.dump();
}

ClassifierSpec ClassifierSpec::FromJsonText(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("classifier spec is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("kind")) {
    throw ConfigError("classifier spec needs a \"kind\" field");
  }
  ClassifierSpec s = Default(ParseKind(doc.at("kind").get<std::string>()));
  try {
    Read(doc, "seed", s.seed);
    const json params = doc.value("params", json::object());
    switch (s.kind) {
      case Kind::kLR:
        Read(params, "l2", s.lr.l2);
        Read(params, "max_iter", s.lr.max_iter);
        Read(params, "grad_tol", s.lr.grad_tol);
        break;
      case Kind::kDT:
        ReadCriterion(params, s.dt.criterion);
        Read(params, "max_depth", s.dt.max_depth);
        Read(params, "min_samples_split", s.dt.min_samples_split);
        break;
      case Kind::kGNB:
        Read(params, "var_smoothing", s.gnb.var_smoothing);
        break;
      case Kind::kRF:
        Read(params, "n_trees", s.rf.n_trees);
        Read(params, "bootstrap", s.rf.bootstrap);
        Read(params, "max_features", s.rf.max_features);
        ReadCriterion(params, s.rf.criterion);
        Read(params, "max_depth", s.rf.max_depth);
        Read(params, "min_samples_split", s.rf.min_samples_split);
        break;
      case Kind::kMLP:
        Read(params, "hidden", s.mlp.hidden);
        Read(params, "learning_rate", s.mlp.learning_rate);
        Read(params, "beta1", s.mlp.beta1);
        Read(params, "beta2", s.mlp.beta2);
        Read(params, "epsilon", s.mlp.epsilon);
        Read(params, "batch_size", s.mlp.batch_size);
        Read(params, "epochs", s.mlp.epochs);
        Read(params, "alpha", s.mlp.alpha);
        Read(params, "tol", s.mlp.tol);
        Read(params, "n_iter_no_change", s.mlp.n_iter_no_change);
        break;
      case Kind::kGB:
        Read(params, "n_stages", s.gb.n_stages);
        Read(params, "max_depth", s.gb.max_depth);
        Read(params, "learning_rate", s.gb.learning_rate);
        Read(params, "min_samples_split", s.gb.min_samples_split);
        break;
    }
  } catch (const json::exception& e) {
    throw ConfigError(std::string("classifier spec: ") + e.what());
  }
  s.Validate();
  return s;
}

int ArgMax(std::span<const double> values) {
  int best = 0;
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i] > values[static_cast<std::size_t>(best)]) best = static_cast<int>(i);
  }
  return best;
}

Matrix Model::PredictProba(const Matrix& x) const {
  if (static_cast<std::size_t>(x.cols()) != feature_count_) {
    throw ConfigError("model expects " + std::to_string(feature_count_) +
                      " feature columns, got " + std::to_string(x.cols()));
  }
  if (x.rows() == 0) return Matrix(0, class_count_);
  return DoPredictProba(x);
}

Labels Model::Predict(const Matrix& x) const {
  const Matrix proba = PredictProba(x);
  Labels out(static_cast<std::size_t>(proba.rows()));
  for (Eigen::Index r = 0; r < proba.rows(); ++r) out[static_cast<std::size_t>(r)] = ArgMax(RowSpan(proba, r));
  return out;
}

TrainedModel Train(const ClassifierSpec& spec, const data::DataMatrix& d) {
  spec.Validate();
  d.Validate();
  if (d.rows() == 0) throw DataError("cannot train on zero rows");
  if (d.cols() == 0) throw DataError("cannot train on zero feature columns");
  const auto counts = d.ClassCounts();
  const auto present = std::count_if(counts.begin(), counts.end(),
                                     [](std::size_t c) { return c > 0; });
  if (present < 2) throw DataError("training data contains a single class");

  switch (spec.kind) {
    case Kind::kLR: return TrainLogistic(spec, d);
    case Kind::kDT: return TrainDecisionTree(spec, d);
    case Kind::kGNB: return TrainNaiveBayes(spec, d);
    case Kind::kRF: return TrainForest(spec, d);
    case Kind::kMLP: return TrainMlp(spec, d);
    case Kind::kGB: return TrainBoosting(spec, d);
  }
  throw ConfigError("unknown model kind");
}

}  // namespace afe::models
