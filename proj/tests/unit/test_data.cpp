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

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "doctest.h"
#include "test_support.hpp"

#include "afe/common/errors.hpp"
#include "afe/data/csv.hpp"
#include "afe/data/scaler.hpp"
#include "afe/data/split.hpp"
#include "afe/data/synth.hpp"
#include "afe/models/classifier.hpp"

using namespace afe;
using afe::testing::MakeData;
using afe::testing::Rows;
using afe::testing::TempDir;

namespace {

const char* kLabelSchema = R"({"y": "label"})";

std::string ErrorOf(const std::function<void()>& f) {
  try {
    f();
  } catch (const std::exception& e) {
    return e.what();
  }
  return "";
}

// Empirical mutual information in bits between a binned column and labels.
double MutualInformationBits(const std::vector<int>& a, const std::vector<int>& b) {
  std::map<std::pair<int, int>, double> joint;
  std::map<int, double> pa, pb;
  const double n = static_cast<double>(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    joint[{a[i], b[i]}] += 1.0 / n;
    pa[a[i]] += 1.0 / n;
    pb[b[i]] += 1.0 / n;
  }
  double mi = 0.0;
  for (const auto& [k, p] : joint) mi += p * std::log2(p / (pa[k.first] * pb[k.second]));
  return mi;
}

}  // namespace

TEST_CASE("load_csv rejects a header-only file") {
  TempDir dir;
  const auto csv = dir.Write("a.csv", "x,y\n");
  const auto msg = ErrorOf([&] { data::LoadCsv(csv, data::Schema::FromJsonText(kLabelSchema)); });
  CHECK(msg.find("no data rows") != std::string::npos);
}

TEST_CASE("load_csv maps label tokens lexicographically") {
  TempDir dir;
  const auto csv = dir.Write("a.csv", "x,y\n1.5,YES\n2.5,NO\n");
  const auto d = data::LoadCsv(csv, data::Schema::FromJsonText(kLabelSchema));
  CHECK(d.labels == Labels{1, 0});
  CHECK(d.class_names == std::vector<std::string>{"NO", "YES"});
  CHECK(d.rows() == 2);
  CHECK(d.features(0, 0) == 1.5);
  CHECK(d.features(1, 0) == 2.5);
}

TEST_CASE("load_csv error contract") {
  TempDir dir;
  const auto schema = data::Schema::FromJsonText(
      R"({"c": {"feature-categorical": {"a": 0, "b": 1}}, "y": "label"})");

  SUBCASE("missing file names the path") {
    const auto msg = ErrorOf([&] { data::LoadCsv(dir.path() / "nope.csv", schema); });
    CHECK(msg.find("nope.csv") != std::string::npos);
  }
  SUBCASE("unmapped categorical value") {
    const auto csv = dir.Write("c.csv", "c,y\na,1\nz,0\n");
    CHECK(ErrorOf([&] { data::LoadCsv(csv, schema); }).find("unmapped categorical value") !=
          std::string::npos);
  }
  SUBCASE("row with a missing cell is rejected with its row number") {
    const auto csv = dir.Write("m.csv", "c,y\na,1\n,0\nb,1\n");
    const auto msg = ErrorOf([&] { data::LoadCsv(csv, schema); });
    CHECK(msg.find("data row 2") != std::string::npos);
    CHECK(msg.find("missing") != std::string::npos);
  }
  SUBCASE("incomplete rows can be dropped and are counted") {
    const auto csv = dir.Write("m.csv", "c,y\na,1\n,0\nb,0\n");
    data::LoadOptions opt;
    opt.drop_incomplete_rows = true;
    data::LoadStats stats;
    const auto d = data::LoadCsv(csv, schema, opt, &stats);
    CHECK(d.rows() == 2);
    CHECK(stats.rows_dropped == 1);
  }
  SUBCASE("label column absent") {
    const auto csv = dir.Write("l.csv", "c,z\na,1\n");
    CHECK(ErrorOf([&] { data::LoadCsv(csv, schema); }).find("label column 'y' absent") !=
          std::string::npos);
  }
}

TEST_CASE("lung layout: 2/1 and M/F codings become 1/0, padded headers are trimmed") {
  TempDir dir;
  const auto csv = dir.Write(
      "lung.csv",
      "GENDER,AGE,SMOKING,YELLOW_FINGERS,ANXIETY,PEER_PRESSURE,CHRONIC DISEASE,FATIGUE ,"
      "ALLERGY ,WHEEZING,ALCOHOL CONSUMING,COUGHING,SHORTNESS OF BREATH,"
      "SWALLOWING DIFFICULTY,CHEST PAIN,LUNG_CANCER\n"
      "M,69,1,2,2,1,1,2,1,2,2,2,2,2,2,YES\n"
      "F,59,1,1,1,2,1,2,1,2,1,2,2,1,2,NO\n");
  const auto d = data::LoadCsv(csv, data::Schema::Load(AFE_SOURCE_DIR "/data/lung.schema.json"));
  REQUIRE(d.cols() == 15);
  CHECK(d.feature_names[7] == "FATIGUE");
  CHECK(d.features(0, 0) == 1.0);  // M
  CHECK(d.features(1, 0) == 0.0);  // F
  CHECK(d.features(0, 1) == 69.0);
  CHECK(d.features(0, 2) == 0.0);  // SMOKING 1 -> no
  CHECK(d.features(0, 3) == 1.0);  // YELLOW_FINGERS 2 -> yes
  CHECK(d.labels == Labels{1, 0});
}

TEST_CASE("heart layout: multi-level columns use the schema codes") {
  TempDir dir;
  const auto csv = dir.Write(
      "heart.csv",
      "Age,Sex,ChestPainType,RestingBP,Cholesterol,FastingBS,RestingECG,MaxHR,"
      "ExerciseAngina,Oldpeak,ST_Slope,HeartDisease\n"
      "40,M,ATA,140,289,0,Normal,172,N,0,Up,0\n"
      "49,F,NAP,160,180,0,ST,156,Y,1.5,Flat,1\n");
  const auto d =
      data::LoadCsv(csv, data::Schema::Load(AFE_SOURCE_DIR "/data/heart.schema.json"));
  REQUIRE(d.cols() == 11);
  CHECK(d.features(0, 2) == 1.0);
  CHECK(d.features(1, 2) == 2.0);
  CHECK(d.features(1, 8) == 1.0);
  CHECK(d.features(1, 9) == 1.5);
  CHECK(d.features(0, 10) == 2.0);
  CHECK(d.labels == Labels{0, 1});
}

TEST_CASE("export round trip reproduces the matrix exactly") {
  TempDir dir;
  auto d = data::SynthDataset(64, 2, 3, 7);
  d.features(0, 3) = 0.1 + 0.2;  // not exactly representable in short decimal
  const auto csv = dir.path() / "out.csv";
  data::WriteCsv(csv, d);
  const auto back = data::LoadCsv(csv, data::Schema::ForMatrix(d));
  CHECK(back.features == d.features);
  CHECK(back.labels == d.labels);
  CHECK(back.feature_names == d.feature_names);
  CHECK(back.Digest() == d.Digest());

  data::WriteCsv(dir.path() / "empty.csv", d, 0);
  std::ifstream f(dir.path() / "empty.csv");
  std::string header, extra;
  std::getline(f, header);
  CHECK(header.find("f0") == 0);
  CHECK_FALSE(std::getline(f, extra));
}

TEST_CASE("stratified split arithmetic") {
  Matrix x(100, 1);
  Labels y(100);
  for (int i = 0; i < 100; ++i) {
    x(i, 0) = i;
    y[static_cast<std::size_t>(i)] = i % 2;
  }
  const auto d = MakeData(x, y, 2);
  const auto s = data::StratifiedSplit(d, 0.7, 0);
  CHECK(s.train.rows() == 70);
  CHECK(s.test.rows() == 30);
  CHECK(s.train.ClassCounts() == std::vector<std::size_t>{35, 35});
  CHECK(s.test.ClassCounts() == std::vector<std::size_t>{15, 15});

  const auto again = data::StratifiedSplit(d, 0.7, 0);
  CHECK(again.train_rows == s.train_rows);
  CHECK(again.test_rows == s.test_rows);

  std::set<std::size_t> all(s.train_rows.begin(), s.train_rows.end());
  for (const auto r : s.test_rows) CHECK(all.insert(r).second);
  CHECK(all.size() == 100);
}

TEST_CASE("stratified split keeps every class within one sample of the ratio") {
  std::mt19937 gen(11);
  for (int trial = 0; trial < 30; ++trial) {
    const int k = 2 + trial % 3;
    std::vector<int> sizes;
    Labels y;
    for (int c = 0; c < k; ++c) {
      sizes.push_back(2 + static_cast<int>(gen() % 60));
      y.insert(y.end(), static_cast<std::size_t>(sizes.back()), c);
    }
    Matrix x = Matrix::Zero(static_cast<Eigen::Index>(y.size()), 1);
    const double ratio = 0.3 + 0.05 * (trial % 10);
    const auto s = data::StratifiedSplit(MakeData(x, y, k), ratio, static_cast<std::uint64_t>(trial));
    const auto test_counts = s.test.ClassCounts();
    for (int c = 0; c < k; ++c) {
      const double expected = sizes[static_cast<std::size_t>(c)] * (1.0 - ratio);
      CHECK(std::abs(static_cast<double>(test_counts[static_cast<std::size_t>(c)]) - expected) <= 1.0);
    }
    CHECK(s.train.rows() + s.test.rows() == y.size());
  }
}

TEST_CASE("918 rows at 0.7 give 642 or 643 training rows") {
  Labels y(918);
  for (std::size_t i = 0; i < y.size(); ++i) y[i] = i < 508 ? 1 : 0;
  const auto s = data::StratifiedSplit(MakeData(Matrix::Zero(918, 2), y, 2), 0.7, 0);
  CHECK((s.train.rows() == 642 || s.train.rows() == 643));
  CHECK(s.train.rows() + s.test.rows() == 918);
}

TEST_CASE("stratified split errors") {
  const auto d = MakeData(Matrix::Zero(5, 1), Labels{0, 0, 0, 0, 1}, 2);
  CHECK_THROWS_AS(data::StratifiedSplit(d, 0.7, 0), DataError);
  const auto ok = MakeData(Matrix::Zero(4, 1), Labels{0, 0, 1, 1}, 2);
  CHECK_THROWS(data::StratifiedSplit(ok, 0.0, 0));
  CHECK_THROWS(data::StratifiedSplit(ok, 1.0, 0));
}

TEST_CASE("standardize: population std, pass-through, train statistics") {
  const auto train = MakeData(Rows({{0, 5}, {2, 5}, {4, 5}}), Labels{0, 1, 0}, 2);
  const auto p = data::FitStandardize(train);
  CHECK(p.mean[0] == 2.0);
  CHECK(p.stddev[0] == doctest::Approx(std::sqrt(8.0 / 3.0)).epsilon(1e-15));
  CHECK(p.passthrough[1]);
  const auto t = data::ApplyStandardize(train, p);
  const double c = 2.0 / std::sqrt(8.0 / 3.0);
  CHECK(t.features(0, 0) == doctest::Approx(-c).epsilon(1e-15));
  CHECK(t.features(1, 0) == 0.0);
  CHECK(t.features(2, 0) == doctest::Approx(c).epsilon(1e-15));
  CHECK(t.features.col(1) == train.features.col(1));
  CHECK(t.labels == train.labels);

  // Test rows are shifted by the training mean (2), not their own (11).
  const auto test = MakeData(Rows({{10, 5}, {12, 5}}), Labels{0, 1}, 2);
  const auto tt = data::ApplyStandardize(test, p);
  CHECK(tt.features(0, 0) == doctest::Approx((10.0 - 2.0) / std::sqrt(8.0 / 3.0)));
  CHECK(tt.features(1, 0) == doctest::Approx((12.0 - 2.0) / std::sqrt(8.0 / 3.0)));

  CHECK_THROWS_AS(data::ApplyStandardize(MakeData(Rows({{1, 2, 3}}), Labels{0}, 2), p), DataError);
}

TEST_CASE("standardized training columns have zero mean and unit std") {
  const auto d = data::SynthDataset(300, 3, 4, 5);
  const auto t = data::ApplyStandardize(d, data::FitStandardize(d));
  for (Eigen::Index j = 0; j < t.features.cols(); ++j) {
    const double mean = t.features.col(j).mean();
    const double sd = std::sqrt((t.features.col(j).array() - mean).square().mean());
    CHECK(std::abs(mean) < 1e-12);
    CHECK(std::abs(sd - 1.0) < 1e-12);
  }
}

TEST_CASE("synth dataset shape, determinism and label noise") {
  const auto a = data::SynthDataset(200, 2, 6, 1);
  const auto b = data::SynthDataset(200, 2, 6, 1);
  CHECK(a.rows() == 200);
  CHECK(a.cols() == 8);
  CHECK(a.features == b.features);
  CHECK(a.labels == b.labels);
  CHECK_FALSE(data::SynthDataset(200, 2, 6, 2).features == a.features);

  std::size_t flipped = 0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    flipped += a.labels[i] != data::SynthLabel(RowSpan(a.features, static_cast<Eigen::Index>(i)), 2);
  }
  CHECK(flipped == static_cast<std::size_t>(std::floor(0.03 * 200)));
  CHECK_THROWS(data::SynthDataset(10, 2, 6, 1));
}

TEST_CASE("synth noise columns carry no label information") {
  const std::size_t n = 5000;
  const auto d = data::SynthDataset(n, 2, 6, 1);
  for (Eigen::Index j = 2; j < 8; ++j) {
    std::vector<double> col(n);
    for (std::size_t i = 0; i < n; ++i) col[i] = d.features(static_cast<Eigen::Index>(i), j);
    std::vector<double> sorted = col;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> bins(n);
    for (std::size_t i = 0; i < n; ++i) {
      bins[i] = static_cast<int>(std::upper_bound(sorted.begin(), sorted.end(), col[i]) - sorted.begin()) * 4 /
                static_cast<int>(n + 1);
    }
    CHECK(MutualInformationBits(bins, d.labels) < 0.02);
  }
}

TEST_CASE("synth labels ignore noise columns") {
  auto d = data::SynthDataset(200, 2, 4, 3);
  for (std::size_t i = 0; i < d.rows(); ++i) {
    auto row = RowSpan(d.features, static_cast<Eigen::Index>(i));
    std::vector<double> permuted(row.begin(), row.end());
    std::reverse(permuted.begin() + 2, permuted.end());
    CHECK(data::SynthLabel(permuted, 2) == data::SynthLabel(row, 2));
  }
}

TEST_CASE("single informative column: a tree fits all but the flipped labels") {
  const auto d = data::SynthDataset(400, 1, 0, 9);
  const auto m = models::Train(models::ClassifierSpec::Default(models::Kind::kDT), d);
  const auto pred = m->Predict(d.features);
  std::size_t wrong = 0;
  for (std::size_t i = 0; i < d.rows(); ++i) wrong += pred[i] != d.labels[i];
  CHECK(wrong == static_cast<std::size_t>(std::floor(0.03 * 400)));
}

TEST_CASE("digest tracks content") {
  auto d = data::SynthDataset(40, 1, 1, 0);
  const auto h = d.Digest();
  CHECK(d.Digest() == h);
  d.features(3, 1) += 1e-9;
  CHECK(d.Digest() != h);
}
