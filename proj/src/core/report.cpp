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

#include "afe/core/report.hpp"

#include <charconv>
#include <cstdio>

#include "json.hpp"

namespace afe::core {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

ordered_json MetricsJson(const metrics::MetricsReport& m) {
  ordered_json j;
  j["accuracy"] = m.accuracy;
  j["precision"] = m.precision;
  j["recall"] = m.recall;
  j["f1"] = m.f1;
  j["positive_label"] = m.positive_label;
  j["confusion"] = m.confusion;
  return j;
}

ordered_json VectorJson(const importance::ImportanceVector& v) {
  ordered_json j;
  j["method"] = std::string(importance::MethodName(v.method));
  j["feature_names"] = v.feature_names;
  j["raw_scores"] = v.raw_scores;
  j["scores"] = v.scores;
  j["uniform_fallback"] = v.uniform_fallback;
  return j;
}

std::vector<std::string> Names(const AfeReport& r, const FeatureSet& s) {
  std::vector<std::string> out;
  for (const auto j : s) out.push_back(r.feature_names[j]);
  return out;
}

ordered_json SelectionJson(const AfeReport& r, const MedianSelection& s) {
  ordered_json j;
  j["selected_features"] = Names(r, s.features);
  j["median"] = s.median;
  j["fallback"] = s.fallback;
  return j;
}

ordered_json MethodJson(const AfeReport& r, const MethodResult& m) {
  ordered_json j;
  j["importance"] = VectorJson(m.importance);
  j["selection"] = SelectionJson(r, m.selection);
  j["metrics"] = MetricsJson(m.metrics);
  return j;
}

std::string Hex(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

}  // namespace

std::string FormatDouble(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string ReportJson(const AfeReport& r, const std::string& generated_at) {
  const AfeConfig& c = r.config;
  ordered_json doc;
  doc["schema_version"] = kReportSchemaVersion;
  doc["generated_at"] = generated_at;

  ordered_json ds;
  ds["name"] = r.dataset_name;
  ds["rows"] = r.rows;
  ds["features"] = r.feature_names.size();
  ds["feature_names"] = r.feature_names;
  ds["class_names"] = r.class_names;
  ds["digest"] = Hex(r.dataset_digest);
  ds["train_rows"] = r.train_rows;
  ds["test_rows"] = r.test_rows;
  doc["dataset"] = ds;

  ordered_json cfg;
  cfg["classifier"] = json::parse(c.classifier.ToJsonText());
  cfg["seed"] = c.seed;
  cfg["split_ratio"] = c.split_ratio;
  cfg["standardize"] = c.standardize;
  cfg["pfi_repeats"] = c.pfi_repeats;
  cfg["background_size"] = c.background_size;
  cfg["shap_sample_cap"] = c.shap_sample_cap;
  ordered_json ga;
  ga["population"] = c.ga.population;
  ga["elite"] = c.ga.elite;
  ga["crossover_rate"] = c.ga.crossover_rate;
  ga["mutation_rate"] = c.ga.mutation_rate;
  ga["max_iter"] = c.ga.max_iter;
  ga["seed"] = c.ga.seed;
  ga["fitness_holdout"] = c.ga.fitness_holdout;
  ga["binary_importance"] = c.ga_binary_importance;
  cfg["ga"] = ga;
  doc["config"] = cfg;

  ordered_json base = MetricsJson(r.baseline);
  base["majority_accuracy"] = r.majority_accuracy;
  doc["baseline"] = base;

  ordered_json methods;
  methods["PCT"] = MethodJson(r, r.pct);
  methods["SHAP"] = MethodJson(r, r.shap);
  ordered_json gaj = MethodJson(r, r.ga);
  gaj["best_mask"] = Names(r, importance::MaskToSet(r.ga_result.best_mask));
  gaj["best_fitness"] = r.ga_result.best_fitness;
  gaj["fitness_history"] = r.ga_result.fitness_history;
  gaj["evaluations"] = r.ga_result.evaluations;
  methods["GA"] = gaj;
  doc["methods"] = methods;

  ordered_json w;
  w["PCT"] = r.weights.pct;
  w["SHAP"] = r.weights.shap;
  w["GA"] = r.weights.ga;
  doc["weights"] = w;

  doc["combined"] = VectorJson(r.combined);
  ordered_json ranking = ordered_json::array();
  for (std::size_t k = 0; k < r.ranking.size(); ++k) {
    const std::size_t j = r.ranking[k];
    ordered_json row;
    row["rank"] = k + 1;
    row["feature"] = r.feature_names[j];
    row["index"] = j;
    row["weight"] = r.combined.scores[j];
    ranking.push_back(row);
  }
  doc["ranking"] = ranking;

  ordered_json afe = SelectionJson(r, r.afe_selection);
  afe["metrics"] = MetricsJson(r.afe_metrics);
  doc["afe"] = afe;
  return doc.dump(2) + "\n";
}

std::string ImportanceJson(const AfeReport& r) {
  ordered_json doc;
  doc["PCT"] = VectorJson(r.pct.importance);
  doc["SHAP"] = VectorJson(r.shap.importance);
  doc["GA"] = VectorJson(r.ga.importance);
  doc["AFE"] = VectorJson(r.combined);
  return doc.dump(2) + "\n";
}

std::string RankingCsv(const AfeReport& r) {
  std::string out = "feature,weight\n";
  for (const std::size_t j : r.ranking) {
    out += r.feature_names[j] + "," + FormatDouble(r.combined.scores[j]) + "\n";
  }
  return out;
}

}  // namespace afe::core
