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

#ifndef AFE_CLI_BENCHMARK_HPP_
#define AFE_CLI_BENCHMARK_HPP_

#include <filesystem>
#include <string>
#include <vector>

#include "afe/core/afe.hpp"
#include "afe/data/data_matrix.hpp"
#include "afe/models/classifier.hpp"

namespace afe::cli {

inline constexpr const char* kSuites[] = {"lung", "heart", "covid", "synth"};
inline constexpr std::size_t kCovidSubsampleRows = 10000;
inline constexpr std::size_t kSynthRows = 600;
inline constexpr std::size_t kSynthInformative = 2;
inline constexpr std::size_t kSynthNoise = 6;

struct SuiteOptions {
  std::filesystem::path data_dir = "data";
  // 0 keeps every row.
  std::size_t covid_rows = kCovidSubsampleRows;
  std::size_t synth_rows = kSynthRows;
  std::uint64_t seed = 0;
};

// <data_dir>/<suite>.csv read with <data_dir>/<suite>.schema.json; "synth" is
// generated. The COVID table is reduced to a seeded stratified subsample.
data::DataMatrix LoadSuite(const std::string& suite, const SuiteOptions& options);

struct BenchmarkRow {
  std::string dataset;
  std::string algorithm;
  std::string method;  // baseline, PCT, XAI, GA, AFE
  double accuracy = 0.0;
  double f1 = 0.0;
  double recall = 0.0;
  double precision = 0.0;
};

inline constexpr const char* kBenchmarkMethods[] = {"baseline", "PCT", "XAI", "GA", "AFE"};

// Five rows per report, in kBenchmarkMethods order.
std::vector<BenchmarkRow> BenchmarkRows(const std::string& dataset,
                                        const core::AfeReport& report);

std::string BenchmarkCsv(const std::vector<BenchmarkRow>& rows);
std::string BenchmarkJson(const std::string& suite, const std::vector<BenchmarkRow>& rows,
                          double majority_accuracy, const std::string& generated_at);
// algorithm,baseline,PCT,XAI,GA,AFE for one of accuracy, f1, recall, precision.
std::string FigureCsv(const std::vector<BenchmarkRow>& rows, const std::string& metric);

}  // namespace afe::cli

#endif  // AFE_CLI_BENCHMARK_HPP_
