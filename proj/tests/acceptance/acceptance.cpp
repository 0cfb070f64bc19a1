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

// Acceptance runner. One line per criterion:
//   criterion N: PASS|FAIL <summary>
// followed by indented detail lines. Exit status is 0 only when every
// requested criterion passes.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <unistd.h>

#include "CLI11.hpp"
#include "json.hpp"

#include "afe/cli/app.hpp"
#include "afe/cli/benchmark.hpp"
#include "afe/common/errors.hpp"
#include "afe/common/parallel.hpp"
#include "afe/common/rng.hpp"
#include "afe/core/afe.hpp"
#include "afe/core/fusion.hpp"
#include "afe/data/csv.hpp"
#include "afe/data/split.hpp"
#include "afe/data/synth.hpp"
#include "afe/importance/genetic.hpp"
#include "afe/importance/permutation.hpp"
#include "afe/importance/shapley.hpp"
#include "afe/models/tree.hpp"

namespace fs = std::filesystem;
using namespace afe;
using nlohmann::json;

namespace {

// Pinned tolerances and budgets.
constexpr double kEfficiencyTol = 1e-9;
constexpr double kDummyTol = 1e-12;
constexpr double kFormulationTol = 1e-12;
constexpr double kLinearTol = 1e-12;
constexpr double kWeightSumTol = 1e-12;
constexpr double kCombinedSumTol = 1e-9;
constexpr double kShapBudgetSeconds = 60.0;
constexpr double kGaBudgetSeconds = 60.0;
constexpr double kBandBudgetSeconds = 600.0;
constexpr double kCovidBudgetSeconds = 900.0;
constexpr std::size_t kAxiomInstances = 100;
constexpr std::size_t kAxiomColumns = 12;
constexpr std::size_t kFormulationInstances = 20;
constexpr int kGaSeeds = 10;
constexpr int kGaRequired = 9;
constexpr double kLungRfLow = 92.3, kLungRfHigh = 98.3;
constexpr double kHeartGbLow = 86.5, kHeartGbHigh = 94.5;
constexpr double kCovidAfeSlackPts = 2.0;

const std::vector<std::string> kReferenceTop5 = {"ANXYELFIN", "COUGHING", "CHRONIC DISEASE",
                                             "FATIGUE", "ALCOHOL CONSUMING"};

struct Verdict {
  bool pass = false;
  std::string summary;
  std::vector<std::string> details;
};

using Clock = std::chrono::steady_clock;

double Seconds(Clock::time_point since) {
  return std::chrono::duration<double>(Clock::now() - since).count();
}

std::string Num(double v, int precision = 4) {
  std::ostringstream s;
  s.precision(precision);
  s << v;
  return s.str();
}

fs::path DataDir() {
  if (const char* env = std::getenv("AFE_DATA_DIR"); env != nullptr && *env != '\0') return env;
  return fs::path(AFE_SOURCE_DIR) / "data";
}

// Empty when both files are present.
std::string MissingSnapshot(const std::string& suite) {
  const fs::path dir = DataDir();
  std::string missing;
  for (const auto& f : {dir / (suite + ".csv"), dir / (suite + ".schema.json")}) {
    if (!fs::exists(f)) missing += (missing.empty() ? "" : ", ") + f.string();
  }
  return missing;
}

Verdict Missing(const std::string& what) {
  return {false, "dataset snapshot missing: " + what,
          {"place the file(s) as described in data/README.md and rerun"}};
}

std::string Slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct CliResult {
  int code;
  std::string err;
};

CliResult RunCli(std::vector<std::string> args) {
  args.insert(args.begin(), "afe");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::Run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, err.str()};
}

fs::path ScratchDir(const std::string& tag) {
  const fs::path dir = fs::temp_directory_path() /
                       ("afe_acceptance_" + tag + "_" + std::to_string(::getpid()));
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::set<std::size_t> UsedFeatures(const models::Model& m) {
  std::set<std::size_t> used;
  const auto* view = dynamic_cast<const models::TreeEnsembleView*>(&m);
  for (const auto& tree : view->trees()) {
    for (const auto& node : tree.nodes()) {
      if (node.feature >= 0) used.insert(static_cast<std::size_t>(node.feature));
    }
  }
  return used;
}

Verdict Criterion1() {
  if (const auto miss = MissingSnapshot("lung"); !miss.empty()) return Missing(miss);
  const auto start = Clock::now();
  cli::SuiteOptions so;
  so.data_dir = DataDir();
  auto full = cli::LoadSuite("lung", so);
  FeatureSet cols(std::min(kAxiomColumns, full.cols()));
  for (std::size_t j = 0; j < cols.size(); ++j) cols[j] = j;
  const auto d = full.SelectFeatures(cols);
  const auto split = data::StratifiedSplit(d, 0.7, 0);
  const auto bg = importance::BackgroundSet::Sample(split.train.features,
                                                    importance::kDefaultBackgroundSize, 0);

  std::vector<std::size_t> rows(d.rows());
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = i;
  Rng pick(0, "acceptance_instances");
  pick.Shuffle(std::span<std::size_t>(rows));
  rows.resize(std::min(kAxiomInstances, rows.size()));

  double worst_eff = 0.0, worst_dummy = 0.0;
  std::size_t dummies = 0;
  for (const auto kind : {models::Kind::kDT, models::Kind::kRF}) {
    const auto model = models::Train(models::ClassifierSpec::Default(kind, 0), split.train);
    const auto used = UsedFeatures(*model);
    for (const std::size_t r : rows) {
      const auto e = importance::ShapleyExact(
          *model, RowSpan(d.features, static_cast<Eigen::Index>(r)), bg);
      double sum = 0.0;
      for (const double v : e.phi) sum += v;
      worst_eff = std::max(worst_eff, std::abs(sum - (e.fx_full - e.base_value)));
      for (std::size_t j = 0; j < e.phi.size(); ++j) {
        if (used.count(j) == 0) {
          ++dummies;
          worst_dummy = std::max(worst_dummy, std::abs(e.phi[j]));
        }
      }
    }
  }
  const double secs = Seconds(start);
  Verdict v;
  v.pass = worst_eff < kEfficiencyTol && worst_dummy < kDummyTol && secs < kShapBudgetSeconds;
  v.summary = "Shapley axioms on lung, DT+RF, " + std::to_string(cols.size()) + " columns";
  v.details = {"max efficiency gap " + Num(worst_eff) + " (tol " + Num(kEfficiencyTol) + ")",
               "dummy attributions checked " + std::to_string(dummies) + ", max |phi| " +
                   Num(worst_dummy) + " (tol " + Num(kDummyTol) + ")",
               "runtime " + Num(secs) + " s (budget " + Num(kShapBudgetSeconds) + " s)"};
  return v;
}

Verdict Criterion2() {
  const auto d = data::SynthDataset(200, 2, 6, 2);
  const auto split = data::StratifiedSplit(d, 0.7, 2);
  const auto model = models::Train(models::ClassifierSpec::Default(models::Kind::kDT), split.train);
  const auto bg = importance::BackgroundSet::Sample(split.train.features, 32, 2);
  double worst = 0.0;
  for (std::size_t r = 0; r < kFormulationInstances; ++r) {
    const auto x = RowSpan(split.test.features, static_cast<Eigen::Index>(r));
    const auto a = importance::ShapleyExact(*model, x, bg);
    const auto b = importance::ShapleyPermutationForm(*model, x, bg);
    for (std::size_t j = 0; j < a.phi.size(); ++j) worst = std::max(worst, std::abs(a.phi[j] - b.phi[j]));
  }
  return {worst < kFormulationTol, "exact vs permutation form on synth, p=8",
          {std::to_string(kFormulationInstances) + " instances, max |dphi| " + Num(worst) +
           " (tol " + Num(kFormulationTol) + ")"}};
}

// f(x) = w.x + c written as a binary model whose class-1 output is linear.
class LinearStub final : public models::Model {
 public:
  LinearStub(std::vector<double> w, double c)
      : Model(models::ClassifierSpec::Default(models::Kind::kLR), w.size(), 2),
        w_(std::move(w)), c_(c) {}

 protected:
  Matrix DoPredictProba(const Matrix& x) const override {
    Matrix out(x.rows(), 2);
    for (Eigen::Index r = 0; r < x.rows(); ++r) {
      double z = c_;
      for (std::size_t j = 0; j < w_.size(); ++j) z += w_[j] * x(r, static_cast<Eigen::Index>(j));
      out(r, 1) = z;
      out(r, 0) = 1.0 - z;
    }
    return out;
  }

 private:
  std::vector<double> w_;
  double c_;
};

Verdict Criterion3() {
  std::mt19937_64 gen(3);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  double worst = 0.0;
  int trials = 0;
  for (std::size_t p = 1; p <= 10; ++p) {
    for (int t = 0; t < 5; ++t, ++trials) {
      std::vector<double> w(p), x(p);
      Matrix b(1, static_cast<Eigen::Index>(p));
      for (std::size_t j = 0; j < p; ++j) {
        w[j] = u(gen);
        x[j] = u(gen);
        b(0, static_cast<Eigen::Index>(j)) = u(gen);
      }
      const LinearStub m(w, u(gen));
      const auto e = importance::ShapleyExact(m, x, importance::BackgroundSet::FromRows(b));
      for (std::size_t j = 0; j < p; ++j) {
        worst = std::max(worst, std::abs(e.phi[j] - w[j] * (x[j] - b(0, static_cast<Eigen::Index>(j)))));
      }
    }
  }
  return {worst < kLinearTol, "linear closed form, single background row",
          {std::to_string(trials) + " stubs with p in [1, 10], max error " + Num(worst) +
           " (tol " + Num(kLinearTol) + ")"}};
}

Verdict Criterion4() {
  // Column 0 separates the classes with a margin, so the tree stops after one
  // split and every other column is unsplit. Column 3 is constant.
  const std::size_t n = 300;
  auto d = data::SynthDataset(n, 1, 3, 4);
  for (std::size_t i = 0; i < n; ++i) {
    const auto r = static_cast<Eigen::Index>(i);
    d.labels[i] = i % 2 == 0 ? 0 : 1;
    d.features(r, 0) = (d.labels[i] == 0 ? -1.0 : 1.0) + 0.1 * d.features(r, 1);
    d.features(r, 3) = 2.5;
  }
  const auto split = data::StratifiedSplit(d, 0.7, 4);
  const auto model = models::Train(models::ClassifierSpec::Default(models::Kind::kDT), split.train);
  const auto used = UsedFeatures(*model);
  const auto pfi = importance::PermutationImportance(*model, split.test, 10, 4);

  Verdict v;
  v.summary = "PFI null columns";
  v.pass = true;
  for (std::size_t j = 1; j < d.cols(); ++j) {
    const bool unsplit = used.count(j) == 0;
    v.pass = v.pass && unsplit && pfi.raw_scores[j] == 0.0;
    v.details.push_back(d.feature_names[j] + (j == 3 ? " (constant)" : "") +
                        (unsplit ? " unsplit" : " SPLIT") + ", raw score " +
                        Num(pfi.raw_scores[j], 17));
  }
  v.details.push_back("split column raw score " + Num(pfi.raw_scores[0]));
  return v;
}

bool HasPair(const FeatureSet& s) {
  return std::find(s.begin(), s.end(), 0) != s.end() && std::find(s.begin(), s.end(), 1) != s.end();
}

Verdict Criterion5() {
  const auto d = data::SynthDataset(cli::kSynthRows, 2, 4, 5);
  const auto split = data::StratifiedSplit(d, 0.7, 5);
  const auto spec = models::ClassifierSpec::Default(models::Kind::kDT);
  const auto oracle = importance::ExhaustiveBestSubset(spec, split);

  Verdict v;
  v.summary = "exhaustive oracle and GA recovery on synth(2 informative, 4 noise)";
  std::string subset;
  for (const auto j : oracle.best_subset) subset += " f" + std::to_string(j);
  v.details.push_back("oracle best subset {" + subset + " } fitness " + Num(oracle.fitness) +
                      " over " + std::to_string(oracle.evaluated) + " subsets");
  int hits = 0;
  double slowest = 0.0;
  for (int s = 0; s < kGaSeeds; ++s) {
    importance::GaConfig cfg;
    cfg.seed = static_cast<std::uint64_t>(s);
    const auto start = Clock::now();
    const auto r = importance::GaEvolve(spec, split.train, cfg);
    const double secs = Seconds(start);
    slowest = std::max(slowest, secs);
    const bool hit = HasPair(importance::MaskToSet(r.best_mask));
    hits += hit ? 1 : 0;
    v.details.push_back("seed " + std::to_string(s) + ": " + (hit ? "pair found" : "pair missed") +
                        ", fitness " + Num(r.best_fitness) + ", " + Num(secs, 3) + " s");
  }
  v.details.push_back("GA recovered the pair in " + std::to_string(hits) + "/" +
                      std::to_string(kGaSeeds) + " seeds (need " + std::to_string(kGaRequired) +
                      "), slowest " + Num(slowest, 3) + " s (budget " + Num(kGaBudgetSeconds) + " s)");
  v.pass = HasPair(oracle.best_subset) && hits >= kGaRequired && slowest < kGaBudgetSeconds;
  return v;
}

Verdict Criterion6() {
  std::mt19937_64 gen(6);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double worst_w = 0.0, worst_c = 0.0, worst_env = 0.0;
  const int trials = 2000;
  for (int t = 0; t < trials; ++t) {
    const std::size_t p = 4 + static_cast<std::size_t>(t % 12);
    std::vector<std::string> names(p);
    for (std::size_t j = 0; j < p; ++j) names[j] = "x" + std::to_string(j);
    auto draw = [&](importance::Method m) {
      std::vector<double> raw(p);
      for (auto& r : raw) r = u(gen) < 0.2 ? 0.0 : u(gen);
      return importance::ImportanceVector::FromRaw(m, raw, names);
    };
    const auto a = draw(importance::Method::kPCT);
    const auto b = draw(importance::Method::kSHAP);
    const auto g = draw(importance::Method::kGA);
    const auto w = core::ComputeWeights(u(gen), u(gen), u(gen));
    worst_w = std::max(worst_w, std::abs(w.pct + w.shap + w.ga - 1.0));
    const auto c = core::CombineImportances(a, b, g, w);
    double sum = 0.0;
    for (std::size_t j = 0; j < p; ++j) {
      sum += c.scores[j];
      const double lo = std::min({a.scores[j], b.scores[j], g.scores[j]});
      const double hi = std::max({a.scores[j], b.scores[j], g.scores[j]});
      worst_env = std::max({worst_env, lo - c.scores[j], c.scores[j] - hi});
    }
    worst_c = std::max(worst_c, std::abs(sum - 1.0));
  }
  bool thirds = true;
  for (const double acc : {1e-6, 0.1, 1.0 / 3.0, 0.5, 0.7, 0.95304, 1.0}) {
    const auto w = core::ComputeWeights(acc, acc, acc);
    thirds = thirds && w.pct == 1.0 / 3.0 && w.shap == 1.0 / 3.0 && w.ga == 1.0 / 3.0;
  }
  return {worst_w <= kWeightSumTol && worst_c <= kCombinedSumTol && worst_env <= 0.0 && thirds,
          "fusion algebra",
          {std::to_string(trials) + " random fusions",
           "max |sum(w) - 1| " + Num(worst_w) + " (tol " + Num(kWeightSumTol) + ")",
           "max |sum(combined) - 1| " + Num(worst_c) + " (tol " + Num(kCombinedSumTol) + ")",
           "max envelope violation " + Num(std::max(worst_env, 0.0)),
           std::string("equal accuracies give exactly 1/3 each: ") + (thirds ? "yes" : "no")}};
}

Verdict Criterion7() {
  if (const auto miss = MissingSnapshot("lung"); !miss.empty()) return Missing(miss);
  const auto dir = ScratchDir("c7");
  const auto out = dir / "lung_report.json";
  const auto r = RunCli({"rank", "--data", (DataDir() / "lung.csv").string(), "--schema",
                         (DataDir() / "lung.schema.json").string(), "--model", "rf", "--seed",
                         "0", "--out", out.string()});
  if (r.code != 0) return {false, "afe rank on lung failed", {r.err}};
  const auto j = json::parse(Slurp(out));
  std::vector<std::string> ranked;
  for (const auto& e : j["ranking"]) ranked.push_back(e["feature"].get<std::string>());
  auto norm = [](std::string s) {
    while (!s.empty() && s.back() == ' ') s.pop_back();
    return s;
  };
  bool anx_top3 = false;
  for (std::size_t i = 0; i < std::min<std::size_t>(3, ranked.size()); ++i) {
    anx_top3 = anx_top3 || norm(ranked[i]) == "ANXYELFIN";
  }
  int overlap = 0;
  std::string top5;
  for (std::size_t i = 0; i < std::min<std::size_t>(5, ranked.size()); ++i) {
    top5 += (i ? ", " : "") + norm(ranked[i]);
    overlap += std::count(kReferenceTop5.begin(), kReferenceTop5.end(), norm(ranked[i])) > 0 ? 1 : 0;
  }
  fs::remove_all(dir);
  return {anx_top3 && overlap >= 3, "lung RF ranking versus the reference top five",
          {"top five: " + top5, std::string("ANXYELFIN in top three: ") + (anx_top3 ? "yes" : "no"),
           "overlap with reference top five: " + std::to_string(overlap) + "/5 (need 3)"}};
}

double AfeAccuracyPct(const std::string& suite, models::Kind kind, double* secs) {
  cli::SuiteOptions so;
  so.data_dir = DataDir();
  const auto d = cli::LoadSuite(suite, so);
  core::AfeConfig cfg;
  cfg.classifier = models::ClassifierSpec::Default(kind);
  cfg.SetSeed(0);
  const auto start = Clock::now();
  const auto report = core::RunAfe(cfg, d, suite);
  *secs = Seconds(start);
  return 100.0 * report.afe_metrics.accuracy;
}

Verdict Criterion8() {
  Verdict v;
  v.summary = "accuracy bands: lung RF and heart GB with AFE features";
  v.pass = true;
  struct Band {
    const char* suite;
    models::Kind kind;
    double lo, hi;
  };
  for (const Band& b : {Band{"lung", models::Kind::kRF, kLungRfLow, kLungRfHigh},
                        Band{"heart", models::Kind::kGB, kHeartGbLow, kHeartGbHigh}}) {
    if (const auto miss = MissingSnapshot(b.suite); !miss.empty()) {
      v.pass = false;
      v.details.push_back(std::string(b.suite) + ": dataset snapshot missing: " + miss);
      continue;
    }
    double secs = 0.0;
    const double acc = AfeAccuracyPct(b.suite, b.kind, &secs);
    const bool ok = acc >= b.lo && acc <= b.hi && secs < kBandBudgetSeconds;
    v.pass = v.pass && ok;
    v.details.push_back(std::string(b.suite) + ": AFE accuracy " + Num(acc) + "% in [" +
                        Num(b.lo) + ", " + Num(b.hi) + "]: " + (ok ? "yes" : "no") + ", " +
                        Num(secs, 3) + " s");
  }
  return v;
}

Verdict Criterion9() {
  if (const auto miss = MissingSnapshot("covid"); !miss.empty()) return Missing(miss);
  const auto dir = ScratchDir("c9");
  const auto start = Clock::now();
  const auto r = RunCli({"benchmark", "--suite", "covid", "--data-dir", DataDir().string(),
                         "--out", dir.string()});
  const double secs = Seconds(start);
  if (r.code != 0) return {false, "covid benchmark failed", {r.err}};
  const auto j = json::parse(Slurp(dir / "benchmark.json"));
  const double majority = j["majority_accuracy"].get<double>();
  std::map<std::string, std::map<std::string, double>> acc;
  for (const auto& row : j["rows"]) {
    acc[row["algorithm"].get<std::string>()][row["method"].get<std::string>()] =
        row["accuracy"].get<double>();
  }
  Verdict v;
  v.summary = "COVID 10k subsample benchmark";
  v.pass = secs < kCovidBudgetSeconds && acc.size() == 6;
  for (const auto& [algo, m] : acc) {
    bool above = true;
    for (const auto& [method, a] : m) above = above && a >= majority;
    const bool afe_ok = 100.0 * m.at("AFE") >= 100.0 * m.at("baseline") - kCovidAfeSlackPts;
    v.pass = v.pass && above && afe_ok;
    v.details.push_back(algo + ": baseline " + Num(100 * m.at("baseline")) + "%, AFE " +
                        Num(100 * m.at("AFE")) + "%, all methods >= majority " +
                        (above ? "yes" : "no") + ", AFE within 2 pts: " + (afe_ok ? "yes" : "no"));
  }
  v.details.push_back("majority baseline " + Num(100 * majority) + "%, runtime " + Num(secs, 4) +
                      " s (budget " + Num(kCovidBudgetSeconds) + " s)");
  fs::remove_all(dir);
  return v;
}

std::string StripStamp(const std::string& text) {
  auto j = json::parse(text);
  j.erase("generated_at");
  return j.dump();
}

Verdict Criterion10() {
  const auto dir = ScratchDir("c10");
  const auto d = data::SynthDataset(cli::kSynthRows, 2, 6, 10);
  const auto csv = dir / "synth.csv";
  data::WriteCsv(csv, d, std::nullopt);
  std::ofstream(dir / "synth.schema.json") << data::Schema::ForMatrix(d).ToJsonText();
  const std::string schema = (dir / "synth.schema.json").string();

  Verdict v;
  v.summary = "determinism across repeated runs and thread counts";
  v.pass = true;
  auto compare = [&](const std::string& what, const std::vector<fs::path>& files) {
    bool same = true;
    for (std::size_t i = 1; i < files.size(); ++i) {
      const auto a = Slurp(files[0]), b = Slurp(files[i]);
      const bool is_json = files[0].extension() == ".json";
      same = same && !a.empty() && (is_json ? StripStamp(a) == StripStamp(b) : a == b);
    }
    v.pass = v.pass && same;
    v.details.push_back(what + ": " + (same ? "identical" : "DIFFERENT"));
  };

  std::vector<fs::path> reports, rankings, imps, benches, bench_csvs;
  int run = 0;
  for (const char* threads : {"1", "1", "8", "8"}) {
    const std::string tag = std::to_string(run++);
    const auto rep = dir / ("rank_" + tag + ".json");
    const auto r1 = RunCli({"rank", "--data", csv.string(), "--schema", schema, "--model", "rf",
                            "--seed", "10", "--threads", threads, "--out", rep.string()});
    const auto imp = dir / ("imp_" + tag + ".json");
    const auto r2 = RunCli({"importance", "--data", csv.string(), "--schema", schema, "--model",
                            "gb", "--seed", "10", "--threads", threads, "--out", imp.string()});
    const auto bench = dir / ("bench_" + tag);
    const auto r3 = RunCli({"benchmark", "--suite", "synth", "--models", "lr,dt,gnb", "--seed",
                            "10", "--threads", threads, "--out", bench.string()});
    if (r1.code != 0 || r2.code != 0 || r3.code != 0) {
      fs::remove_all(dir);
      return {false, v.summary, {"command failed: " + r1.err + r2.err + r3.err}};
    }
    reports.push_back(rep);
    rankings.push_back(dir / ("rank_" + tag + ".csv"));
    imps.push_back(imp);
    benches.push_back(bench / "benchmark.json");
    bench_csvs.push_back(bench / "benchmark.csv");
  }
  compare("rank report (rf), threads 1,1,8,8", reports);
  compare("ranking csv", rankings);
  compare("importance (gb)", imps);
  compare("benchmark json (lr,dt,gnb)", benches);
  compare("benchmark csv", bench_csvs);
  fs::remove_all(dir);
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"AFE acceptance criteria"};
  std::vector<int> which;
  app.add_option("--criterion", which, "Criterion number(s) 1-10; default all")
      ->check(CLI::Range(1, 10));
  CLI11_PARSE(app, argc, argv);
  if (which.empty()) {
    for (int i = 1; i <= 10; ++i) which.push_back(i);
  }
  SetThreadCount(static_cast<int>(std::max(1U, std::thread::hardware_concurrency())));

  const std::vector<std::function<Verdict()>> criteria = {
      Criterion1, Criterion2, Criterion3, Criterion4, Criterion5,
      Criterion6, Criterion7, Criterion8, Criterion9, Criterion10};
  int failed = 0;
  for (const int n : which) {
    Verdict v;
    try {
      v = criteria[static_cast<std::size_t>(n - 1)]();
    } catch (const std::exception& e) {
      v = {false, "error", {e.what()}};
    }
    std::cout << "criterion " << n << ": " << (v.pass ? "PASS" : "FAIL") << " " << v.summary
              << "\n";
    for (const auto& d : v.details) std::cout << "    " << d << "\n";
    std::cout.flush();
    failed += v.pass ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
