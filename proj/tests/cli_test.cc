// Copyright 2026 The ccround Authors.
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

#include "ccround/cli.h"

#include <cstdlib>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include "ccround/instance_io.h"
#include "gtest/gtest.h"
#include "json.hpp"

namespace ccround {
namespace {

using nlohmann::json;

struct CliRun {
  int code = 0;
  std::string out;
  std::string err;
};

CliRun Cli(std::initializer_list<std::string> args) {
  std::vector<std::string> storage = {"ccround"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : storage) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  CliRun r;
  r.code = RunCli(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string Temp(const std::string& name) { return ::testing::TempDir() + "cli_test_" + name; }

void WriteFile(const std::string& path, const std::string& text) {
  std::ofstream(path) << text;
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

TEST(CliTest, UsageErrors) {
  EXPECT_EQ(Cli({}).code, kExitUsage);
  EXPECT_EQ(Cli({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(Cli({"gen", "complete", "--n", "5"}).code, kExitUsage);
  EXPECT_EQ(Cli({"gen", "moebius", "--n", "5"}).code, kExitUsage);
  EXPECT_EQ(Cli({"gen", "complete", "--n", "5", "--p", "2", "--seed", "1"}).code,
            kExitUsage);
  EXPECT_EQ(Cli({"certify", "nosuch", "--alpha", "2"}).code, kExitUsage);
  EXPECT_EQ(Cli({"lp", Temp("missing.txt")}).code, kExitUsage);
  EXPECT_EQ(Cli({"--version"}).code, kExitOk);
}

TEST(CliTest, GenIsReproducible) {
  const CliRun a = Cli({"gen", "complete", "--n", "9", "--p", "0.5", "--seed", "7"});
  const CliRun b = Cli({"gen", "complete", "--n", "9", "--p", "0.5", "--seed", "7"});
  ASSERT_EQ(a.code, kExitOk);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(ParseInstance(a.out).n(), 9);
  const CliRun kp = Cli({"gen", "kpartite", "--parts", "3,3,3", "--p", "0.5", "--seed", "1",
                      "--format", "json"});
  ASSERT_EQ(kp.code, kExitOk);
  EXPECT_EQ(ParseInstance(kp.out).num_parts(), 3);
  const CliRun gap = Cli({"gen", "gap-ti", "--n", "4"});
  ASSERT_EQ(gap.code, kExitOk);
  const Instance inst = ParseInstance(gap.out);
  EXPECT_TRUE(inst.weighted());
  EXPECT_TRUE(inst.triangle_inequality());
}

TEST(CliTest, GenSideOutputs) {
  const std::string truth = Temp("truth.json");
  ASSERT_EQ(Cli({"gen", "planted", "--n", "8", "--k", "2", "--corruption", "0",
                 "--seed", "3", "--truth", truth, "-o", Temp("planted.txt")})
                .code,
            kExitOk);
  const Clustering planted = ClusteringFromJson(ReadFile(truth));
  EXPECT_EQ(ClusteringCost(ParseInstance(ReadFile(Temp("planted.txt"))), planted), 0.0);

  const std::string lp = Temp("gap_lp.json");
  const CliRun c4 = Cli({"gen", "gap-kpartite", "--cycle", "2", "--lp-out", lp});
  ASSERT_EQ(c4.code, kExitOk);
  EXPECT_NEAR(json::parse(ReadFile(lp)).at("objective").get<double>(), 4.0 / 3.0, 1e-12);

  const std::string w = Temp("w.txt");
  ASSERT_EQ(Cli({"gen", "weighted-random", "--n", "3", "--ti", "--seed", "2", "-o", w})
                .code,
            kExitOk);
  const CliRun blow = Cli({"gen", "blowup", "--input", w, "--copies", "2", "--seed", "5",
                        "--map-out", Temp("map.json")});
  ASSERT_EQ(blow.code, kExitOk);
  EXPECT_EQ(ParseInstance(blow.out).n(), 6);
  EXPECT_EQ(json::parse(ReadFile(Temp("map.json"))).at("original_of").size(), 6u);
}

TEST(CliTest, LpExamples) {
  const std::string gap = Temp("gap4.txt");
  ASSERT_EQ(Cli({"gen", "gap-ti", "--n", "4", "-o", gap}).code, kExitOk);
  const CliRun r = Cli({"lp", gap});
  ASSERT_EQ(r.code, kExitOk);
  const json doc = json::parse(r.out);
  EXPECT_LE(doc.at("objective").get<double>(), 12.0 + 1e-6);
  EXPECT_TRUE(doc.at("meta").contains("version"));
  EXPECT_TRUE(doc.at("validation").at("feasible").get<bool>());

  const std::string plus = Temp("plus5.txt");
  ASSERT_EQ(Cli({"gen", "complete", "--n", "5", "--p", "1", "--seed", "0", "-o", plus})
                .code,
            kExitOk);
  EXPECT_NEAR(json::parse(Cli({"lp", plus}).out).at("objective").get<double>(), 0.0,
              1e-12);

  const std::string c4 = Temp("c4.txt");
  ASSERT_EQ(Cli({"gen", "gap-kpartite", "--cycle", "2", "-o", c4}).code, kExitOk);
  EXPECT_LE(json::parse(Cli({"lp", c4}).out).at("objective").get<double>(),
            4.0 / 3.0 + 1e-9);

  const std::string bad = Temp("bad.txt");
  WriteFile(bad, "cc complete 2\n0 1 ?\n");
  EXPECT_EQ(Cli({"lp", bad}).code, kExitDataFormat);
}

TEST(CliTest, Round) {
  const std::string inst = Temp("c9.txt");
  const std::string lp = Temp("c9_lp.json");
  ASSERT_EQ(Cli({"gen", "complete", "--n", "9", "--seed", "7", "-o", inst}).code, kExitOk);
  ASSERT_EQ(Cli({"lp", inst, "-o", lp}).code, kExitOk);

  const CliRun derand = Cli({"round", inst, lp, "--scheme", "complete206", "--mode", "derand"});
  ASSERT_EQ(derand.code, kExitOk);
  const json d = json::parse(derand.out);
  EXPECT_TRUE(d.at("guarantee_holds").get<bool>());
  EXPECT_LE(d.at("cost").get<double>(), 2.06 * d.at("lp_objective").get<double>() + 1e-9);

  const CliRun a = Cli({"round", inst, lp, "--scheme", "complete206", "--seed", "4"});
  const CliRun b = Cli({"round", inst, lp, "--scheme", "complete206", "--seed", "4"});
  ASSERT_EQ(a.code, kExitOk);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(Cli({"round", inst, lp, "--scheme", "complete206"}).code, kExitUsage);

  const std::string w = Temp("w4.txt");
  const std::string wlp = Temp("w4_lp.json");
  ASSERT_EQ(Cli({"gen", "weighted-random", "--n", "4", "--ti", "--seed", "3", "-o", w})
                .code,
            kExitOk);
  ASSERT_EQ(Cli({"lp", w, "-o", wlp}).code, kExitOk);
  const CliRun weighted = Cli({"round", w, wlp, "--scheme", "weighted_ti_150", "--seed", "1"});
  ASSERT_EQ(weighted.code, kExitOk);
  EXPECT_EQ(json::parse(weighted.out).at("mode"), "random-weighted");
  EXPECT_EQ(Cli({"round", w, wlp, "--scheme", "weighted_ti_150", "--mode", "derand"}).code,
            kExitUsage);
  EXPECT_EQ(Cli({"round", inst, wlp, "--scheme", "complete206", "--seed", "1"}).code,
            kExitDataFormat);
}

TEST(CliTest, Certify) {
  const std::string report = Temp("cert.json");
  const CliRun pass = Cli({"certify", "complete206", "--alpha", "2.06", "--grid", "0.005",
                        "--tol", "1e-9", "-o", report});
  EXPECT_EQ(pass.code, kExitOk);
  EXPECT_EQ(json::parse(ReadFile(report)).at("verdict"), "PASS");

  const CliRun fail = Cli({"certify", "complete206", "--alpha", "2.00"});
  EXPECT_EQ(fail.code, kExitFail);
  const json doc = json::parse(fail.out);
  EXPECT_LT(doc.at("witness").at("surplus").get<double>(), 0.0);
  EXPECT_NE(fail.err.find("FAIL"), std::string::npos);

  EXPECT_EQ(Cli({"certify", "kpartite3", "--alpha", "3", "--grid", "0.01"}).code, kExitOk);
  EXPECT_EQ(Cli({"certify", "weighted_ti_153", "--alpha", "1.49", "--grid", "0.05"}).code,
            kExitFail);

  const std::string scheme = Temp("sq.json");
  WriteFile(scheme, R"({"name": "sq",
    "f_plus": [{"from": 0, "to": 1, "kind": "linear", "params": [1, 0]}],
    "f_minus": [{"from": 0, "to": 1, "kind": "quadratic", "params": [0, 1]}]})");
  EXPECT_EQ(Cli({"certify", scheme, "--alpha", "3", "--no-fallback"}).code,
            kExitIneligible);
  EXPECT_NE(Cli({"certify", scheme, "--alpha", "3", "--grid", "0.05"}).code,
            kExitIneligible);
}

TEST(CliTest, Opt) {
  const std::string inst = Temp("c8.txt");
  ASSERT_EQ(Cli({"gen", "complete", "--n", "8", "--seed", "2", "-o", inst}).code, kExitOk);
  const CliRun r = Cli({"opt", inst});
  ASSERT_EQ(r.code, kExitOk);
  const json doc = json::parse(r.out);
  const Clustering c(doc.at("clustering").get<std::vector<int>>());
  EXPECT_EQ(ClusteringCost(ParseInstance(ReadFile(inst)), c), doc.at("opt").get<double>());

  EXPECT_EQ(Cli({"opt", inst, "--max-n", "5"}).code, kExitUsage);
  setenv("CC_MAX_BRUTE_N", "abc", 1);
  EXPECT_EQ(Cli({"opt", inst}).code, kExitUsage);
  setenv("CC_MAX_BRUTE_N", "99", 1);
  EXPECT_EQ(Cli({"opt", inst}).code, kExitUsage);
  setenv("CC_MAX_BRUTE_N", "8", 1);
  EXPECT_EQ(Cli({"opt", inst}).code, kExitOk);
  unsetenv("CC_MAX_BRUTE_N");
}

TEST(CliTest, Bench) {
  const CliRun a = Cli({"bench", "--family", "complete", "--n", "7", "--instances", "3",
                     "--trials", "50", "--scheme", "complete206", "--seed", "3"});
  ASSERT_EQ(a.code, kExitOk);
  const CliRun b = Cli({"bench", "--family", "complete", "--n", "7", "--instances", "3",
                     "--trials", "50", "--scheme", "complete206", "--seed", "3",
                     "--jobs", "3"});
  EXPECT_EQ(a.out, b.out);
  std::istringstream lines(a.out);
  std::string line;
  std::getline(lines, line);
  EXPECT_EQ(line.rfind("# meta: ", 0), 0u);
  EXPECT_EQ(json::parse(line.substr(8)).at("seed"), 3);
  std::getline(lines, line);
  EXPECT_EQ(line.rfind("instance,seed,n,lp,opt,mean_alg", 0), 0u);
  int rows = 0;
  while (std::getline(lines, line)) ++rows;
  EXPECT_EQ(rows, 3);
  EXPECT_EQ(Cli({"bench", "--n", "7"}).code, kExitUsage);
}

TEST(CliTest, BoundsAndLowerBound) {
  const CliRun bounds = Cli({"bounds", "--alpha", "2.06", "--step", "0.01", "--scheme",
                          "complete206"});
  EXPECT_EQ(bounds.code, kExitOk);
  EXPECT_NE(bounds.out.find("x,f_minus_lower,f_plus_upper,f_plus_lower"), std::string::npos);
  const CliRun lower = Cli({"lower-bound", "--alpha", "2.025", "--x", "0.48"});
  ASSERT_EQ(lower.code, kExitOk);
  EXPECT_TRUE(json::parse(lower.out).at("contradiction").get<bool>());
}

}  // namespace
}  // namespace ccround
