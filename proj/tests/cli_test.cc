// Copyright 2026 The defclust Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "defclust/cli.h"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "json.hpp"

namespace defclust::cli {
namespace {

namespace fs = std::filesystem;
using ::testing::HasSubstr;
using ::testing::StartsWith;

const fs::path kData = DEFCLUST_DATA_DIR;

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result Invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int status = Run(args, out, err);
  return {status, out.str(), err.str()};
}

std::vector<std::string> Lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  return lines;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("defclust_cli_" + std::string(::testing::UnitTest::GetInstance()
                                               ->current_test_info()
                                               ->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  fs::path Write(const std::string& name, const std::string& content) {
    const fs::path path = dir_ / name;
    std::ofstream(path) << content;
    return path;
  }

  fs::path dir_;
};

const std::string kCorpus = (kData / "synthetic" / "corpus.jsonl").string();
const std::string kGold = (kData / "synthetic" / "gold.jsonl").string();

TEST_F(CliTest, ClusterAtOneIsASingleGroup) {
  const Result r = Invoke({"cluster", kCorpus, "--alpha", "1.0"});
  ASSERT_EQ(r.status, kExitOk) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  ASSERT_EQ(doc["groups"].size(), 1u);
  EXPECT_EQ(doc["groups"][0].size(), 120u);
  EXPECT_TRUE(doc["ungrouped"].empty());
}

TEST_F(CliTest, ClusterWithoutAlphaIsAUsageError) {
  const Result r = Invoke({"cluster", kCorpus});
  EXPECT_EQ(r.status, kExitUsage);
  EXPECT_THAT(r.err, HasSubstr("alpha"));
}

TEST_F(CliTest, BadFlagCombinationsAreUsageErrors) {
  EXPECT_EQ(Invoke({"sweep", kCorpus, "--grid", "0.5:0.2:0.1"}).status,
            kExitUsage);
  EXPECT_EQ(Invoke({"cluster", kCorpus, "--alpha", "1.5"}).status,
            kExitUsage);
  EXPECT_EQ(Invoke({"cluster", kCorpus, "--alpha", "0.5", "--distance",
                    "hamming", "--dump-energy", (dir_ / "e.csv").string()})
                .status,
            kExitUsage);
  EXPECT_EQ(Invoke({"bogus"}).status, kExitUsage);
}

TEST_F(CliTest, SweepSchemaIsTheSameForBothDistances) {
  for (const std::string kind : {"energy", "hamming"}) {
    const Result r = Invoke({"sweep", kCorpus, kGold, "--distance", kind});
    ASSERT_EQ(r.status, kExitOk) << r.err;
    const auto lines = Lines(r.out);
    ASSERT_EQ(lines.size(), 101u) << kind;
    EXPECT_EQ(lines[0], "alpha,num_groups,precision,recall,zone");
    EXPECT_THAT(lines[1], StartsWith("0.01,"));
    EXPECT_THAT(lines[100], StartsWith("1.00,"));
    EXPECT_THAT(lines[100], HasSubstr(",1.000000,absolute"));
  }
}

TEST_F(CliTest, SweepFallsBackToEmbeddedGold) {
  const Result with_gold = Invoke({"sweep", kCorpus, kGold});
  const Result embedded = Invoke({"sweep", kCorpus});
  ASSERT_EQ(embedded.status, kExitOk) << embedded.err;
  EXPECT_EQ(with_gold.out, embedded.out);
}

TEST_F(CliTest, OutputIsByteIdenticalAcrossRuns) {
  const fs::path a = dir_ / "a.csv";
  const fs::path b = dir_ / "b.csv";
  ASSERT_EQ(Invoke({"sweep", kCorpus, "-o", a.string()}).status, kExitOk);
  ASSERT_EQ(Invoke({"sweep", kCorpus, "-o", b.string()}).status, kExitOk);
  std::ifstream fa(a), fb(b);
  std::stringstream sa, sb;
  sa << fa.rdbuf();
  sb << fb.rdbuf();
  EXPECT_FALSE(sa.str().empty());
  EXPECT_EQ(sa.str(), sb.str());
}

TEST_F(CliTest, DataErrorsExitTwo) {
  const fs::path bad = Write("bad.jsonl", "{\"id\":\"a\",\"text\":\"x\"}\n{\n");
  const Result r = Invoke({"cluster", bad.string(), "--alpha", "0.5"});
  EXPECT_EQ(r.status, kExitData);
  EXPECT_THAT(r.err, HasSubstr("bad.jsonl:2"));
  EXPECT_EQ(Invoke({"cluster", (dir_ / "missing").string(), "--alpha", "0.5"})
                .status,
            kExitData);
}

TEST_F(CliTest, EvalScoresASavedClustering) {
  const fs::path clustering = dir_ / "c.json";
  ASSERT_EQ(Invoke({"cluster", kCorpus, "--alpha", "1", "-o",
                    clustering.string()})
                .status,
            kExitOk);
  const Result r = Invoke({"eval", clustering.string(), kGold});
  ASSERT_EQ(r.status, kExitOk) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["num_groups"], 1);
  EXPECT_DOUBLE_EQ(doc["recall"].get<double>(), 1.0);
  EXPECT_NEAR(doc["precision"].get<double>(), 10.0 / 120.0, 1e-12);
  EXPECT_EQ(doc["zone"], "absolute");
  EXPECT_EQ(doc["intruders"].size(), 110u);
}

TEST_F(CliTest, ReportListsGroups) {
  const Result r = Invoke({"report", kCorpus, kGold, "--alpha", "0.7"});
  ASSERT_EQ(r.status, kExitOk) << r.err;
  EXPECT_THAT(r.out, HasSubstr("zone1"));
  EXPECT_THAT(r.out, HasSubstr("== group 1"));
  EXPECT_THAT(r.out, HasSubstr("sense "));
}

TEST_F(CliTest, ExtractFindsCandidates) {
  const fs::path text = Write(
      "t.txt", "Según el manual, la aguja es un instrumento fino. "
               "El miedo a la aguja es el más frecuente.\n");
  Result r = Invoke({"extract", text.string(), "--terms", "aguja"});
  ASSERT_EQ(r.status, kExitOk) << r.err;
  const auto lines = Lines(r.out);
  ASSERT_EQ(lines.size(), 2u);
  const auto first = nlohmann::json::parse(lines[0]);
  EXPECT_EQ(first["tail"], "instrumento fino");
  EXPECT_EQ(first["span"], nlohmann::json::array({17, 31}));
  EXPECT_EQ(first["term"], "aguja");

  r = Invoke({"extract", text.string(), "--terms", "aguja", "--as-corpus"});
  ASSERT_EQ(r.status, kExitOk) << r.err;
  const auto docs = Lines(r.out);
  ASSERT_EQ(docs.size(), 2u);
  EXPECT_EQ(nlohmann::json::parse(docs[1])["id"], text.string() + "#2");
}

TEST_F(CliTest, ExtractNeedsTerms) {
  const fs::path text = Write("t.txt", "la aguja es un tubo.\n");
  EXPECT_EQ(Invoke({"extract", text.string()}).status, kExitUsage);
}

TEST_F(CliTest, DumpsIntermediateMatrices) {
  const fs::path energy = dir_ / "e.csv";
  const fs::path dist = dir_ / "d.csv";
  const fs::path dendro = dir_ / "t.csv";
  const Result r = Invoke({"cluster", kCorpus, "--alpha", "0.5",
                           "--dump-energy", energy.string(),
                           "--dump-distances", dist.string(), "--dendrogram",
                           dendro.string()});
  ASSERT_EQ(r.status, kExitOk) << r.err;
  std::ifstream d(dist), t(dendro);
  std::stringstream sd, st;
  sd << d.rdbuf();
  st << t.rdbuf();
  EXPECT_EQ(Lines(sd.str()).size(), 1u + 120u * 119u / 2u);
  EXPECT_EQ(Lines(st.str()).size(), 1u + 119u);
  EXPECT_TRUE(fs::exists(energy));
}

}  // namespace
}  // namespace defclust::cli
