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

#include "afe/cli/benchmark.hpp"

#include <algorithm>
#include <map>

#include "json.hpp"

#include "afe/common/errors.hpp"
#include "afe/common/rng.hpp"
#include "afe/core/report.hpp"
#include "afe/data/csv.hpp"
#include "afe/data/split.hpp"
#include "afe/data/synth.hpp"

namespace afe::cli {
namespace {

double Metric(const BenchmarkRow& r, const std::string& metric) {
  if (metric == "accuracy") return r.accuracy;
  if (metric == "f1") return r.f1;
  if (metric == "recall") return r.recall;
  if (metric == "precision") return r.precision;
  throw ConfigError("unknown metric '" + metric + "'");
}

}  // namespace

data::DataMatrix LoadSuite(const std::string& suite, const SuiteOptions& options) {
  if (suite == "synth") {
    return data::SynthDataset(options.synth_rows, kSynthInformative, kSynthNoise, options.seed);
  }
  if (std::find(std::begin(kSuites), std::end(kSuites), suite) == std::end(kSuites)) {
    throw ConfigError("unknown suite '" + suite + "' (expected lung, heart, covid or synth)");
  }
  const auto csv = options.data_dir / (suite + ".csv");
  const auto schema = options.data_dir / (suite + ".schema.json");
  if (!std::filesystem::exists(csv)) {
    throw ConfigError("dataset snapshot missing: " + csv.string() + " (see data/README.md)");
  }
  data::DataMatrix d = data::LoadCsv(csv, data::Schema::Load(schema));
  if (suite == "covid" && options.covid_rows > 0 && d.rows() > options.covid_rows) {
    const double ratio = static_cast<double>(options.covid_rows) / static_cast<double>(d.rows());
    d = data::StratifiedSplit(d, ratio, DeriveSeed(options.seed, "covid_subsample")).train;
  }
  return d;
}

std::vector<BenchmarkRow> BenchmarkRows(const std::string& dataset,
                                        const core::AfeReport& report) {
  const std::string algo(models::KindLabel(report.config.classifier.kind));
  const metrics::MetricsReport* per_method[] = {&report.baseline, &report.pct.metrics,
                                                &report.shap.metrics, &report.ga.metrics,
                                                &report.afe_metrics};
  std::vector<BenchmarkRow> rows;
  for (std::size_t i = 0; i < 5; ++i) {
    const auto& m = *per_method[i];
    rows.push_back({dataset, algo, kBenchmarkMethods[i], m.accuracy, m.f1, m.recall, m.precision});
  }
  return rows;
}

std::string BenchmarkCsv(const std::vector<BenchmarkRow>& rows) {
  std::string out = "dataset,algorithm,method,accuracy,f1,recall,precision\n";
  for (const auto& r : rows) {
    out += r.dataset + "," + r.algorithm + "," + r.method + "," +
           core::FormatDouble(r.accuracy) + "," + core::FormatDouble(r.f1) + "," +
           core::FormatDouble(r.recall) + "," + core::FormatDouble(r.precision) + "\n";
  }
  return out;
}

std::string BenchmarkJson(const std::string& suite, const std::vector<BenchmarkRow>& rows,
                          double majority_accuracy, const std::string& generated_at) {
  nlohmann::ordered_json doc;
  doc["schema_version"] = core::kReportSchemaVersion;
  doc["generated_at"] = generated_at;
  doc["suite"] = suite;
  doc["majority_accuracy"] = majority_accuracy;
  auto& arr = doc["rows"] = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    nlohmann::ordered_json j;
    j["dataset"] = r.dataset;
    j["algorithm"] = r.algorithm;
    j["method"] = r.method;
    j["accuracy"] = r.accuracy;
    j["f1"] = r.f1;
    j["recall"] = r.recall;
    j["precision"] = r.precision;
    arr.push_back(j);
  }
  return doc.dump(2) + "\n";
}

std::string FigureCsv(const std::vector<BenchmarkRow>& rows, const std::string& metric) {
  std::string out = "algorithm";
  for (const char* m : kBenchmarkMethods) out += std::string(",") + m;
  out += "\n";
  std::vector<std::string> algos;
  std::map<std::pair<std::string, std::string>, double> cell;
  for (const auto& r : rows) {
    if (std::find(algos.begin(), algos.end(), r.algorithm) == algos.end()) {
      algos.push_back(r.algorithm);
    }
    cell[{r.algorithm, r.method}] = Metric(r, metric);
  }
  for (const auto& a : algos) {
    out += a;
    for (const char* m : kBenchmarkMethods) {
      const auto it = cell.find({a, m});
      out += ",";
      if (it != cell.end()) out += core::FormatDouble(it->second);
    }
    out += "\n";
  }
  return out;
}

}  // namespace afe::cli
