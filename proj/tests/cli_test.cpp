// Copyright 2026 The qphase Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <cstdio>
#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "qphase/serialize.hpp"

namespace qphase::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "qphase");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

TEST(Cli, FieldTables) {
  const Result r = invoke({"field", "-n", "2"});
  EXPECT_EQ(r.code, kSuccess);
  EXPECT_NE(r.out.find("w2"), std::string::npos);
  const Result j = invoke({"--format", "json", "field", "-n", "2"});
  ASSERT_EQ(j.code, kSuccess);
  const Json doc = Json::parse(j.out);
  EXPECT_EQ(doc["add"][1][2], "w2");
  EXPECT_EQ(doc["mul"][2][3], "1");
  EXPECT_EQ(doc.dump() + "\n", j.out);
}

TEST(Cli, GlobalFlagsAfterSubcommand) {
  const Result r = invoke({"field", "-n", "1", "--format", "json"});
  EXPECT_EQ(r.code, kSuccess);
  EXPECT_NO_THROW(Json::parse(r.out));
}

TEST(Cli, Striations) {
  const Result r = invoke({"--format", "json", "striations", "-n", "2"});
  ASSERT_EQ(r.code, kSuccess);
  EXPECT_EQ(Json::parse(r.out).size(), 5u);
  EXPECT_EQ(invoke({"striations", "-n", "1"}).code, kSuccess);
}

TEST(Cli, MubVerify) {
  for (const char* n : {"1", "2", "3"}) {
    const Result r = invoke({"mub", "-n", n, "--verify"});
    EXPECT_EQ(r.code, kSuccess) << r.err;
  }
  const Result j = invoke({"--format", "json", "mub", "-n", "2"});
  ASSERT_EQ(j.code, kSuccess);
  const Json doc = Json::parse(j.out);
  EXPECT_EQ(doc["bases"].size(), 5u);
  EXPECT_EQ(doc.dump() + "\n", j.out);
}

TEST(Cli, MubFallbackWarns) {
  const Result r = invoke({"mub", "-n", "3", "--labeling", "polynomial", "--verify"});
  EXPECT_EQ(r.code, kSuccess);
  EXPECT_NE(r.err.find("trace-dual"), std::string::npos);
}

TEST(Cli, WignerTable) {
  const Result r = invoke({"wigner", "-n", "1", "--state", "tilted-111"});
  ASSERT_EQ(r.code, kSuccess);
  EXPECT_NE(r.out.find("-0.183"), std::string::npos);
  EXPECT_NE(r.out.find("0.394"), std::string::npos);
  const Result csv = invoke({"--format", "csv", "wigner", "-n", "2", "--state", "singlet"});
  ASSERT_EQ(csv.code, kSuccess);
  EXPECT_NE(csv.out.find("q,p,value\n"), std::string::npos);
  EXPECT_NE(csv.out.find("1,w,0.250"), std::string::npos);
}

TEST(Cli, WignerJsonRoundTrips) {
  const Result r =
      invoke({"--format", "json", "--precision", "6", "wigner", "-n", "2", "--state", "bell0", "--lines"});
  ASSERT_EQ(r.code, kSuccess);
  const Json doc = Json::parse(r.out);
  EXPECT_EQ(doc.dump() + "\n", r.out);
  EXPECT_EQ(doc["line_sums"].size(), 5u);
}

TEST(Cli, WignerInlineVectorWarnsWhenRescaled) {
  const Result r = invoke({"wigner", "-n", "1", "--state", "[1, 1]"});
  EXPECT_EQ(r.code, kSuccess);
  EXPECT_NE(r.err.find("normalized"), std::string::npos);
}

TEST(Cli, TomographyExactAndCountsFiles) {
  const Result exact = invoke({"--format", "json", "tomo", "-n", "2", "--state", "singlet", "--shots", "0"});
  ASSERT_EQ(exact.code, kSuccess) << exact.err;
  const Json rep = Json::parse(exact.out);
  EXPECT_LT(rep["trace_distance"].get<double>(), 1e-9);

  const std::string path =
      (std::filesystem::temp_directory_path() / "qphase_cli_counts.json").string();
  const Result sampled =
      invoke({"--seed", "5", "tomo", "-n", "1", "--state", "plus", "--shots", "200", "--counts-out", path});
  ASSERT_EQ(sampled.code, kSuccess) << sampled.err;
  const Result again = invoke({"tomo", "-n", "1", "--from-counts", path});
  EXPECT_EQ(again.code, kSuccess) << again.err;
  const Result wrong_n = invoke({"tomo", "-n", "2", "--from-counts", path});
  EXPECT_EQ(wrong_n.code, kUsageError);
  std::remove(path.c_str());
}

TEST(Cli, TomographyScalingCsv) {
  const Result r = invoke({"tomo", "-n", "1", "--state", "tilted-111", "--scaling", "64,256", "--seeds", "20"});
  ASSERT_EQ(r.code, kSuccess) << r.err;
  EXPECT_EQ(r.out.rfind("shots,seeds,", 0), 0u);
}

TEST(Cli, Verify) {
  const Result r = invoke({"verify", "--n-max", "2"});
  EXPECT_EQ(r.code, kSuccess) << r.out;
  EXPECT_NE(r.out.find("all checks passed"), std::string::npos);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(invoke({}).code, kUsageError);
  EXPECT_EQ(invoke({"bogus"}).code, kUsageError);
  EXPECT_EQ(invoke({"verify", "--n-max", "0"}).code, kUsageError);
  EXPECT_EQ(invoke({"field", "-n", "0"}).code, kUsageError);
  EXPECT_EQ(invoke({"--precision", "13", "field", "-n", "1"}).code, kUsageError);
  EXPECT_EQ(invoke({"--format", "xml", "field", "-n", "1"}).code, kUsageError);
  EXPECT_EQ(invoke({"wigner", "-n", "1", "--state", "nonsense"}).code, kUsageError);
  EXPECT_EQ(invoke({"wigner", "-n", "1", "--state", "singlet"}).code, kUsageError);
  EXPECT_EQ(invoke({"tomo", "-n", "1", "--state", "up", "--shots", "-5"}).code, kUsageError);
  EXPECT_EQ(invoke({"tomo", "-n", "1"}).code, kUsageError);
}

TEST(Cli, HelpExitsCleanly) {
  const Result r = invoke({"--help"});
  EXPECT_EQ(r.code, kSuccess);
  EXPECT_NE(r.out.find("wigner"), std::string::npos);
}

}  // namespace
}  // namespace qphase::cli
