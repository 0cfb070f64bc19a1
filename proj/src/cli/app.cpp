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

#include "afe/cli/app.hpp"

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "afe/cli/benchmark.hpp"
#include "afe/common/errors.hpp"
#include "afe/common/parallel.hpp"
#include "afe/core/afe.hpp"
#include "afe/core/report.hpp"
#include "afe/data/csv.hpp"

namespace afe::cli {
namespace {

namespace fs = std::filesystem;

struct Options {
  std::string data;
  std::string schema;
  std::string out;
  std::string suite = "synth";
  std::string data_dir;
  std::string model = "rf";
  std::string models;
  std::uint64_t seed = 0;
  int threads = 0;
  std::size_t background_size = importance::kDefaultBackgroundSize;
  std::size_t shap_sample_cap = importance::kDefaultShapSampleCap;
  int pfi_repeats = importance::kDefaultPfiRepeats;
  std::size_t ga_pop = 30;
  std::size_t ga_elite = 10;
  double ga_pc = 0.8;
  double ga_pm = 0.05;
  int ga_iters = 25;
  bool ga_binary = false;
  double split_ratio = 0.7;
  bool no_standardize = false;
  long long limit = -1;
  bool drop_incomplete = false;
  std::size_t covid_rows = kCovidSubsampleRows;
  std::size_t synth_rows = kSynthRows;
};

std::string NowUtc() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::ostringstream s;
  s << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return s.str();
}

void WriteText(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) {
    std::error_code ec;
    fs::create_directories(path.parent_path(), ec);
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ConfigError("cannot write file: " + path.string());
  f << text;
  if (!f) throw ConfigError("write failed: " + path.string());
}

void ApplyThreads(const Options& o) {
  int threads = o.threads;
  if (threads <= 0) {
    if (const char* env = std::getenv("AFE_THREADS"); env != nullptr && *env != '\0') {
      char* end = nullptr;
      const long v = std::strtol(env, &end, 10);
      if (*end != '\0' || v < 1) throw ConfigError(std::string("AFE_THREADS is not a positive integer: ") + env);
      threads = static_cast<int>(v);
    } else {
      threads = static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
    }
  }
  SetThreadCount(threads);
}

data::DataMatrix LoadInput(const Options& o) {
  if (o.data.empty()) throw ConfigError("--data is required");
  if (o.schema.empty()) throw ConfigError("--schema is required");
  if (!fs::exists(o.data)) throw ConfigError("data file not found: " + o.data);
  if (!fs::exists(o.schema)) throw ConfigError("schema file not found: " + o.schema);
  data::LoadOptions lo;
  lo.drop_incomplete_rows = o.drop_incomplete;
  return data::LoadCsv(o.data, data::Schema::Load(o.schema), lo);
}

core::AfeConfig MakeConfig(const Options& o, models::Kind kind) {
  core::AfeConfig c;
  c.classifier = models::ClassifierSpec::Default(kind, o.seed);
  c.SetSeed(o.seed);
  c.split_ratio = o.split_ratio;
  c.standardize = !o.no_standardize;
  c.pfi_repeats = o.pfi_repeats;
  c.background_size = o.background_size;
  c.shap_sample_cap = o.shap_sample_cap;
  c.ga.population = o.ga_pop;
  c.ga.elite = o.ga_elite;
  c.ga.crossover_rate = o.ga_pc;
  c.ga.mutation_rate = o.ga_pm;
  c.ga.max_iter = o.ga_iters;
  c.ga_binary_importance = o.ga_binary;
  c.Validate();
  return c;
}

void PrintRanking(const core::AfeReport& r, std::ostream& out) {
  std::size_t width = 7;
  for (const auto& n : r.feature_names) width = std::max(width, n.size());
  out << std::left << std::setw(6) << "rank" << std::setw(static_cast<int>(width) + 2) << "feature"
      << "weight\n";
  for (std::size_t k = 0; k < r.ranking.size(); ++k) {
    const std::size_t j = r.ranking[k];
    out << std::left << std::setw(6) << k + 1 << std::setw(static_cast<int>(width) + 2)
        << r.feature_names[j] << std::fixed << std::setprecision(6) << r.combined.scores[j]
        << "\n";
  }
  out.unsetf(std::ios::fixed);
  out << "accuracy: baseline " << r.baseline.accuracy << ", AFE " << r.afe_metrics.accuracy
      << "\n";
}

int CmdRank(const Options& o, std::ostream& out) {
  const auto d = LoadInput(o);
  const auto cfg = MakeConfig(o, models::ParseKind(o.model));
  const auto report = core::RunAfe(cfg, d, fs::path(o.data).stem().string());
  const fs::path json_path = o.out.empty() ? fs::path("afe_report.json") : fs::path(o.out);
  fs::path csv_path = json_path;
  csv_path.replace_extension(".csv");
  WriteText(json_path, core::ReportJson(report, NowUtc()));
  WriteText(csv_path, core::RankingCsv(report));
  PrintRanking(report, out);
  out << "report: " << json_path.string() << "\nranking: " << csv_path.string() << "\n";
  return kExitOk;
}

int CmdImportance(const Options& o, std::ostream& out) {
  const auto d = LoadInput(o);
  const auto cfg = MakeConfig(o, models::ParseKind(o.model));
  const auto report = core::RunAfe(cfg, d, fs::path(o.data).stem().string());
  const std::string text = core::ImportanceJson(report);
  if (o.out.empty()) {
    out << text;
  } else {
    WriteText(o.out, text);
    out << "importance: " << o.out << "\n";
  }
  return kExitOk;
}

std::vector<models::Kind> ParseModels(const std::string& list) {
  std::vector<models::Kind> kinds;
  if (list.empty()) return {std::begin(models::kAllKinds), std::end(models::kAllKinds)};
  std::stringstream ss(list);
  std::string tok;
  while (std::getline(ss, tok, ',')) kinds.push_back(models::ParseKind(tok));
  return kinds;
}

int CmdBenchmark(const Options& o, std::ostream& out) {
  SuiteOptions so;
  if (!o.data_dir.empty()) {
    so.data_dir = o.data_dir;
  } else if (const char* env = std::getenv("AFE_DATA_DIR"); env != nullptr && *env != '\0') {
    so.data_dir = env;
  }
  so.covid_rows = o.covid_rows;
  so.synth_rows = o.synth_rows;
  so.seed = o.seed;
  const auto kinds = ParseModels(o.models);
  const auto d = LoadSuite(o.suite, so);
  const fs::path dir = o.out.empty() ? fs::path("benchmark_" + o.suite) : fs::path(o.out);
  const std::string stamp = NowUtc();

  std::vector<BenchmarkRow> rows;
  double majority = 0.0;
  for (const auto kind : kinds) {
    const auto report = core::RunAfe(MakeConfig(o, kind), d, o.suite);
    majority = report.majority_accuracy;
    const auto r = BenchmarkRows(o.suite, report);
    rows.insert(rows.end(), r.begin(), r.end());
    WriteText(dir / "reports" / (std::string(models::KindName(kind)) + ".json"),
              core::ReportJson(report, stamp));
    out << models::KindLabel(kind) << ":";
    for (const auto& row : r) out << " " << row.method << "=" << row.accuracy;
    out << "\n";
  }
  WriteText(dir / "benchmark.csv", BenchmarkCsv(rows));
  WriteText(dir / "benchmark.json", BenchmarkJson(o.suite, rows, majority, stamp));
  for (const char* m : {"accuracy", "f1", "recall", "precision"}) {
    WriteText(dir / ("fig_" + std::string(m) + ".csv"), FigureCsv(rows, m));
  }
  out << "benchmark: " << rows.size() << " rows in " << dir.string() << "\n";
  return kExitOk;
}

int CmdExport(const Options& o, std::ostream& out) {
  const auto d = LoadInput(o);
  if (o.out.empty()) throw ConfigError("--out is required for export-data");
  std::optional<std::size_t> limit;
  if (o.limit >= 0) limit = static_cast<std::size_t>(o.limit);
  fs::path schema_path = o.out;
  schema_path.replace_extension(".schema.json");
  data::WriteCsv(o.out, d, limit);
  WriteText(schema_path, data::Schema::ForMatrix(d).ToJsonText());
  out << "wrote " << (limit ? std::min(*limit, d.rows()) : d.rows()) << " rows to " << o.out
      << " (schema " << schema_path.string() << ")\n";
  return kExitOk;
}

// Turns the JSON config file into flags placed ahead of the real ones, so a
// flag given on the command line overrides the file.
std::vector<std::string> ConfigArgs(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ConfigError("config file not found: " + path);
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(f);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("config file " + path + " is not valid JSON: " + e.what());
  }
  if (!doc.is_object()) throw ConfigError("config file " + path + " must hold a JSON object");
  std::vector<std::string> args;
  for (const auto& [key, value] : doc.items()) {
    std::string flag = "--" + key;
    std::replace(flag.begin(), flag.end(), '_', '-');
    if (value.is_boolean()) {
      if (value.get<bool>()) args.push_back(flag);
    } else if (value.is_string()) {
      args.push_back(flag);
      args.push_back(value.get<std::string>());
    } else if (value.is_number()) {
      args.push_back(flag);
      args.push_back(value.dump());
    } else {
      throw ConfigError("config key '" + key + "' must be a string, number or boolean");
    }
  }
  return args;
}

void AddCommon(CLI::App* sub, Options& o) {
  sub->add_option("--seed", o.seed, "Master seed");
  sub->add_option("--out", o.out, "Output path");
  sub->add_option("--threads", o.threads, "Worker threads (default: AFE_THREADS, then all cores)")
      ->check(CLI::PositiveNumber);
  sub->add_option("--config", "JSON config file; flags override its values");
}

void AddPipeline(CLI::App* sub, Options& o, bool single_model) {
  if (single_model) {
    sub->add_option("--model", o.model, "Classifier")
        ->check(CLI::IsMember({"lr", "dt", "gnb", "rf", "mlp", "gb"}));
  }
  sub->add_option("--background-size", o.background_size, "SHAP background rows")
      ->check(CLI::PositiveNumber);
  sub->add_option("--shap-sample-cap", o.shap_sample_cap, "Rows explained for SHAP importance")
      ->check(CLI::PositiveNumber);
  sub->add_option("--pfi-repeats", o.pfi_repeats, "Shuffles per feature")
      ->check(CLI::PositiveNumber);
  sub->add_option("--ga-pop", o.ga_pop, "GA population size");
  sub->add_option("--ga-elite", o.ga_elite, "GA elite count");
  sub->add_option("--ga-pc", o.ga_pc, "GA crossover rate")->check(CLI::Range(0.0, 1.0));
  sub->add_option("--ga-pm", o.ga_pm, "GA mutation rate")->check(CLI::Range(0.0, 1.0));
  sub->add_option("--ga-iters", o.ga_iters, "GA generations")->check(CLI::NonNegativeNumber);
  sub->add_flag("--ga-binary", o.ga_binary, "GA importance from the best mask only");
  sub->add_option("--split-ratio", o.split_ratio, "Training fraction");
  sub->add_flag("--no-standardize", o.no_standardize, "Skip feature standardization");
}

void AddInput(CLI::App* sub, Options& o) {
  sub->add_option("--data", o.data, "CSV file");
  sub->add_option("--schema", o.schema, "Column-role schema (JSON)");
  sub->add_flag("--drop-incomplete", o.drop_incomplete, "Skip rows with empty cells");
}

}  // namespace

int Run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Adaptive Feature Evaluator", "afe"};
  app.require_subcommand(1);
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);

  auto* rank = app.add_subcommand("rank", "Fused feature ranking with report");
  AddInput(rank, o);
  AddPipeline(rank, o, true);
  AddCommon(rank, o);

  auto* imp = app.add_subcommand("importance", "Per-method importance vectors");
  AddInput(imp, o);
  AddPipeline(imp, o, true);
  AddCommon(imp, o);

  auto* bench = app.add_subcommand("benchmark", "Six classifiers x five methods on a suite");
  bench->add_option("--suite", o.suite, "lung, heart, covid or synth")
      ->check(CLI::IsMember({"lung", "heart", "covid", "synth"}));
  bench->add_option("--data-dir", o.data_dir, "Directory of suite snapshots (default: AFE_DATA_DIR, then data)");
  bench->add_option("--models", o.models, "Comma-separated subset of lr,dt,gnb,rf,mlp,gb");
  bench->add_option("--covid-rows", o.covid_rows, "COVID subsample size, 0 for all rows");
  bench->add_option("--synth-rows", o.synth_rows, "Rows of the synthetic suite")
      ->check(CLI::PositiveNumber);
  AddPipeline(bench, o, false);
  AddCommon(bench, o);

  auto* exp = app.add_subcommand("export-data", "Write the encoded matrix back to CSV");
  AddInput(exp, o);
  exp->add_option("--limit", o.limit, "Rows to write")->check(CLI::NonNegativeNumber);
  AddCommon(exp, o);

  try {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    for (std::size_t i = 1; i < args.size(); ++i) {
      std::string path;
      if (args[i] == "--config" && i + 1 < args.size()) {
        path = args[i + 1];
      } else if (args[i].starts_with("--config=")) {
        path = args[i].substr(9);
      }
      if (!path.empty()) {
        const auto extra = ConfigArgs(path);
        args.insert(args.begin() + 1, extra.begin(), extra.end());
        break;
      }
    }
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "afe: error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const ConfigError& e) {
    err << "afe: error: " << e.what() << "\n";
    return kExitConfig;
  }

  try {
    ApplyThreads(o);
    if (rank->parsed()) return CmdRank(o, out);
    if (imp->parsed()) return CmdImportance(o, out);
    if (bench->parsed()) return CmdBenchmark(o, out);
    return CmdExport(o, out);
  } catch (const PipelineError& e) {
    err << "afe: pipeline error in stage '" << e.stage() << "': " << e.what() << "\n";
    return kExitPipeline;
  } catch (const ConfigError& e) {
    err << "afe: error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const DataError& e) {
    err << "afe: error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    err << "afe: pipeline error: " << e.what() << "\n";
    return kExitPipeline;
  }
}

}  // namespace afe::cli
