// Copyright 2026 The Subpart Authors.
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

#include "subpart/cli/run_config.h"

#include <stdexcept>

#include <gtest/gtest.h>

#include "cli_test_util.h"
#include "subpart/core/errors.h"

namespace subpart {
namespace {

TEST(ParseRunConfigTest, DefaultsAndFields) {
  const RunConfig c = ParseRunConfig(
      R"({"function": {"type": "cardinality", "n": 5}, "m": 3,
          "objective": "min-max-avg", "lambda": 0.25, "algorithm": "mmin",
          "seed": 9, "relaxation": {"max_iters": 10}})",
      "");
  EXPECT_EQ(c.objective, Direction::kMinMaxAvg);
  EXPECT_EQ(c.lambda, 0.25);
  EXPECT_EQ(c.m, 3);
  EXPECT_EQ(c.seed, 9u);
  EXPECT_EQ(c.relaxation.max_iters, 10);
  EXPECT_EQ(c.alpha, 1.0);
  ASSERT_EQ(c.functions.size(), 1u);
  EXPECT_EQ(c.functions[0].n, 5);
}

TEST(ParseRunConfigTest, ResolvesPathsAgainstBaseDir) {
  const RunConfig c = ParseRunConfig(
      R"({"functions": [{"type": "modular", "path": "w.txt"},
                        {"type": "modular", "path": "/abs/w.txt"}]})",
      "/data");
  EXPECT_EQ(c.functions[0].path, "/data/w.txt");
  EXPECT_EQ(c.functions[1].path, "/abs/w.txt");
}

TEST(ParseRunConfigTest, RejectsMalformedConfigs) {
  const char* bad[] = {
      R"({"function": {"type": "cardinality", "n": 2}, "extra": 1})",
      R"({"function": {"type": "cardinality", "n": 2, "size": 1}})",
      R"({"function": {"type": "cardinality", "n": "two"}})",
      R"({"function": {"type": "cardinality", "n": 2}, "objective": "max"})",
      R"({"m": 2})",
      R"({"function": {"n": 2}})",
      R"({"function": {"type": "cardinality", "n": 2},
          "relaxation": {"iters": 3}})",
      "[1, 2]",
      "{\"m\": 2,\n \"function\": }",
  };
  for (const char* text : bad) {
    EXPECT_THROW(ParseRunConfig(text, ""), ParseError) << text;
  }
  try {
    ParseRunConfig("{\"m\": 2,\n \"function\": }", "");
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos) << e.what();
  }
}

TEST(RunAlgorithmTest, EveryAlgorithmRunsInItsDirection) {
  for (const std::string& name : AlgorithmNames()) {
    RunConfig c;
    c.algorithm = name;
    c.m = 2;
    c.lambda = 0.5;
    c.relaxation.max_iters = 50;
    c.functions = {{.type = "cardinality", .n = 6}};
    const auto oracles = BuildOracles(c);
    const bool min_max = name == "greed_min" || name == "mmin" ||
                         name == "lovasz_round" ||
                         name == "general_greed_min" ||
                         name == "general_lovasz_round" ||
                         name == "comb_slb_smp";
    c.objective = min_max ? Direction::kMinMaxAvg : Direction::kMaxMinAvg;
    const Partition p = RunAlgorithm(c, oracles);
    EXPECT_EQ(p.ground_size(), 6) << name;
    EXPECT_EQ(p.num_blocks(), 2) << name;
    c.objective = min_max ? Direction::kMaxMinAvg : Direction::kMinMaxAvg;
    EXPECT_THROW(RunAlgorithm(c, oracles), std::invalid_argument) << name;
  }
}

TEST(RunAlgorithmTest, Misuse) {
  RunConfig c;
  c.functions = {{.type = "cardinality", .n = 4}, {.type = "cardinality", .n = 4}};
  const auto oracles = BuildOracles(c);
  c.algorithm = "greed_max";
  EXPECT_THROW(RunAlgorithm(c, oracles), std::invalid_argument);
  c.algorithm = "greed_sat";
  EXPECT_EQ(RunAlgorithm(c, oracles).num_blocks(), 2);
  c.algorithm = "nope";
  EXPECT_THROW(RunAlgorithm(c, oracles), std::invalid_argument);
  c.algorithm = "general_greed_sat";
  c.lambda = 2.0;
  EXPECT_THROW(RunAlgorithm(c, oracles), std::invalid_argument);
  c.algorithm = "double_greedy";
  c.lambda = 0.0;
  c.m = 3;
  EXPECT_THROW(RunAlgorithm(c, {oracles[0]}), std::invalid_argument);
}

TEST(BuildOracleTest, FunctionTypes) {
  testing::ScratchDir dir;
  const auto eval = [](const OraclePtr& f, std::vector<int> a) {
    return f->Evaluate(a);
  };
  EXPECT_EQ(eval(BuildOracle({.type = "modular",
                              .path = dir.Write("w.txt", "1 2 3")}),
                 {0, 2}),
            4.0);
  EXPECT_EQ(eval(BuildOracle({.type = "setcover",
                              .path = dir.Write("e.txt", "0 0\n0 1\n1 1\n")}),
                 {0, 1}),
            2.0);
  const std::string sim = dir.Write("s.csv", "1,0.5\n0.5,1\n");
  EXPECT_EQ(eval(BuildOracle({.type = "facility", .path = sim}), {0}), 1.5);
  EXPECT_EQ(eval(BuildOracle({.type = "clustered-facility",
                              .path = sim,
                              .labels = dir.Write("l.txt", "0 1")}),
                 {0}),
            1.0);
  EXPECT_GT(eval(BuildOracle({.type = "facility-knn",
                              .path = dir.Write("x.csv", "0,0\n1,0\n0,1\n"),
                              .k = 1}),
                 {0}),
            0.0);
  EXPECT_GT(eval(BuildOracle({.type = "feature",
                              .path = dir.Write("c.txt", "0 0 2\n1 1 1\n")}),
                 {0}),
            0.0);
  EXPECT_THROW(BuildOracle({.type = "graph", .path = sim}), std::invalid_argument);
  EXPECT_THROW(BuildOracle({.type = "clustered-facility", .path = sim}),
               std::invalid_argument);
  EXPECT_THROW(BuildOracle({.type = "facility", .path = dir.File("no.csv")}),
               IoError);
}

}  // namespace
}  // namespace subpart
