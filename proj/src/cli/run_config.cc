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

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iterator>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include <json.hpp>

#include "subpart/core/errors.h"
#include "subpart/core/rng.h"
#include "subpart/functions/functions.h"
#include "subpart/functions/io.h"
#include "subpart/functions/similarity.h"
#include "subpart/mixed/comb.h"
#include "subpart/mixed/general_greed_min.h"
#include "subpart/mixed/general_greed_sat.h"
#include "subpart/mixed/general_lovasz_round.h"
#include "subpart/robust/double_greedy.h"
#include "subpart/robust/greed_sat.h"
#include "subpart/robust/greedy.h"
#include "subpart/robust/majorization.h"

namespace subpart {
namespace {

using nlohmann::json;

void CheckKeys(const json& object, const std::set<std::string>& allowed,
               const std::string& where) {
  if (!object.is_object()) throw ParseError(where + " must be a JSON object");
  for (const auto& [key, value] : object.items()) {
    if (!allowed.count(key)) {
      throw ParseError("unknown key '" + key + "' in " + where);
    }
  }
}

template <typename T>
void Read(const json& object, const char* key, T& out) {
  if (!object.contains(key)) return;
  try {
    out = object.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad value for '") + key + "': " + e.what());
  }
}

template <typename T>
void Read(const json& object, const char* key, std::optional<T>& out) {
  if (!object.contains(key)) return;
  T value{};
  Read(object, key, value);
  out = value;
}

std::string Resolve(const std::string& base_dir, const std::string& path) {
  if (path.empty() || base_dir.empty()) return path;
  const std::filesystem::path p(path);
  return p.is_absolute() ? path : (std::filesystem::path(base_dir) / p).string();
}

FunctionSpec ParseFunction(const json& object, const std::string& base_dir) {
  CheckKeys(object, {"type", "path", "labels", "n", "k", "items", "universe"},
            "function");
  FunctionSpec spec;
  Read(object, "type", spec.type);
  Read(object, "path", spec.path);
  Read(object, "labels", spec.labels);
  Read(object, "n", spec.n);
  Read(object, "k", spec.k);
  Read(object, "items", spec.items);
  Read(object, "universe", spec.universe);
  if (spec.type.empty()) throw ParseError("function needs a 'type'");
  spec.path = Resolve(base_dir, spec.path);
  spec.labels = Resolve(base_dir, spec.labels);
  return spec;
}

Direction ParseObjective(const std::string& name) {
  if (name == "max-min-avg") return Direction::kMaxMinAvg;
  if (name == "min-max-avg") return Direction::kMinMaxAvg;
  throw ParseError("objective must be 'max-min-avg' or 'min-max-avg', got '" +
                   name + "'");
}

struct Algorithm {
  Direction direction;
  bool homogeneous_only;
  std::function<Partition(const RunConfig&, const std::vector<OraclePtr>&)> run;
};

GreedSatConfig SatConfig(const RunConfig& c) {
  return {.alpha = c.alpha, .epsilon = c.epsilon};
}

MixedObjectiveSpec Spec(const RunConfig& c, const std::vector<OraclePtr>& fs) {
  return MixedObjectiveSpec(c.objective, c.lambda, fs, c.m);
}

const std::map<std::string, Algorithm>& Registry() {
  using D = Direction;
  static const auto* registry = new std::map<std::string, Algorithm>{
      {"greed_max",
       {D::kMaxMinAvg, true,
        [](const RunConfig& c, const std::vector<OraclePtr>& fs) {
          return GreedMax(*fs[0], c.m);
        }}},
      {"stream_greed",
       {D::kMaxMinAvg, true,
        [](const RunConfig& c, const std::vector<OraclePtr>& fs) {
          std::vector<int> order(fs[0]->ground_size());
          std::iota(order.begin(), order.end(), 0);
          Rng rng(c.seed);
          rng.Shuffle(std::span<int>(order));
          return StreamGreed(*fs[0], c.m, order);
        }}},
      {"greed_sat",
       {D::kMaxMinAvg, false,
        [](const RunConfig& c, const std::vector<OraclePtr>& fs) {
          return GreedSat(fs, c.m, SatConfig(c));
        }}},
      {"greed_swp",
       {D::kMaxMinAvg, false,
        [](const RunConfig& c, const std::vector<OraclePtr>& fs) {
          return GreedSwp(fs, c.m);
        }}},
      {"mmax",
       {D::kMaxMinAvg, false,
        [](const RunConfig& c, const std::vector<OraclePtr>& fs) {
          return MMax(fs, c.m, {.max_rounds = c.max_rounds}).partition;
        }}},
      {"double_greedy",
       {D::kMaxMinAvg, false,
        [](const RunConfig& c, const std::vector<OraclePtr>& fs) {
          if (c.m != 2) throw std::invalid_argument("double_greedy needs m = 2");
          return DoubleGreedySfa2(*fs[0], *fs[fs.size() - 1], c.seed);
        }}},
      {"general_greed_sat",
       {D::kMaxMinAvg, false,
        [](const RunConfig& c, const std::vector<OraclePtr>& fs) {
          return GeneralGreedSat(fs, c.m, c.lambda, SatConfig(c));
        }}},
      {"comb_sfa_swp",
       {D::kMaxMinAvg, false,
        [](const RunConfig& c, const std::vector<OraclePtr>& fs) {
          return CombSfaSwp(Spec(c, fs)).winner().partition;
        }}},
      {"greed_min",
       {D::kMinMaxAvg, true,
        [](const RunConfig& c, const std::vector<OraclePtr>& fs) {
          return GreedMin(*fs[0], c.m,
                          {.subsample = c.subsample, .seed = c.seed});
        }}},
      {"mmin",
       {D::kMinMaxAvg, false,
        [](const RunConfig& c, const std::vector<OraclePtr>& fs) {
          return MMin(fs, c.m, MMinBounds::kByRole,
                      {.max_rounds = c.max_rounds})
              .partition;
        }}},
      {"lovasz_round",
       {D::kMinMaxAvg, false,
        [](const RunConfig& c, const std::vector<OraclePtr>& fs) {
          return LovaszRound(fs, c.m, c.relaxation);
        }}},
      {"general_greed_min",
       {D::kMinMaxAvg, true,
        [](const RunConfig& c, const std::vector<OraclePtr>& fs) {
          return GeneralGreedMin(*fs[0], c.m, c.lambda,
                                 {.subsample = c.subsample, .seed = c.seed});
        }}},
      {"general_lovasz_round",
       {D::kMinMaxAvg, false,
        [](const RunConfig& c, const std::vector<OraclePtr>& fs) {
          return GeneralLovaszRound(fs, c.m, c.lambda, c.relaxation);
        }}},
      {"comb_slb_smp",
       {D::kMinMaxAvg, false,
        [](const RunConfig& c, const std::vector<OraclePtr>& fs) {
          return CombSlbSmp(Spec(c, fs)).winner().partition;
        }}},
  };
  return *registry;
}

}  // namespace

RunConfig ParseRunConfig(const std::string& text, const std::string& base_dir) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.what());
  }
  CheckKeys(doc,
            {"objective", "lambda", "m", "algorithm", "function", "functions",
             "seed", "epsilon", "alpha", "subsample", "max_rounds",
             "relaxation"},
            "config");
  RunConfig config;
  std::string objective = "max-min-avg";
  Read(doc, "objective", objective);
  config.objective = ParseObjective(objective);
  Read(doc, "lambda", config.lambda);
  Read(doc, "m", config.m);
  Read(doc, "algorithm", config.algorithm);
  Read(doc, "seed", config.seed);
  Read(doc, "epsilon", config.epsilon);
  Read(doc, "alpha", config.alpha);
  Read(doc, "subsample", config.subsample);
  Read(doc, "max_rounds", config.max_rounds);
  if (doc.contains("function") == doc.contains("functions")) {
    throw ParseError("config needs exactly one of 'function' or 'functions'");
  }
  if (doc.contains("function")) {
    config.functions.push_back(ParseFunction(doc["function"], base_dir));
  } else {
    if (!doc["functions"].is_array()) {
      throw ParseError("'functions' must be an array");
    }
    for (const auto& f : doc["functions"]) {
      config.functions.push_back(ParseFunction(f, base_dir));
    }
  }
  if (doc.contains("relaxation")) {
    const json& r = doc["relaxation"];
    CheckKeys(r, {"max_iters", "step_scale", "tolerance", "restarts"},
              "relaxation");
    Read(r, "max_iters", config.relaxation.max_iters);
    Read(r, "step_scale", config.relaxation.step_scale);
    Read(r, "tolerance", config.relaxation.tolerance);
    Read(r, "restarts", config.relaxation.restarts);
  }
  return config;
}

RunConfig LoadRunConfig(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  const std::string text((std::istreambuf_iterator<char>(in)),
                         std::istreambuf_iterator<char>());
  try {
    return ParseRunConfig(
        text, std::filesystem::path(path).parent_path().string());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

OraclePtr BuildOracle(const FunctionSpec& spec) {
  const std::string& t = spec.type;
  if (t == "cardinality") {
    if (spec.n < 1) throw std::invalid_argument("cardinality needs n >= 1");
    return Cardinality(spec.n);
  }
  if (spec.path.empty()) {
    throw std::invalid_argument("function '" + t + "' needs a 'path'");
  }
  if (t == "modular") return Modular(ReadWeights(spec.path));
  if (t == "facility") return FacilityLocation(ReadSimilarityCsv(spec.path));
  if (t == "facility-knn") {
    return FacilityLocation(
        BuildKnnSimilarity(ReadFeatureCsv(spec.path, false).rows, spec.k, true)
            .graph);
  }
  if (t == "setcover") {
    return SetCover(ReadEdgeList(spec.path, spec.items, spec.universe));
  }
  if (t == "feature") return FeatureBased(ReadCountFile(spec.path, spec.items));
  if (t == "clustered-facility") {
    if (spec.labels.empty()) {
      throw std::invalid_argument("clustered-facility needs 'labels'");
    }
    return ClusteredFacility(ReadSimilarityCsv(spec.path),
                             ReadLabels(spec.labels));
  }
  throw std::invalid_argument("unknown function type '" + t + "'");
}

std::vector<OraclePtr> BuildOracles(const RunConfig& config) {
  std::vector<OraclePtr> oracles;
  for (const auto& f : config.functions) oracles.push_back(BuildOracle(f));
  return oracles;
}

std::vector<std::string> AlgorithmNames() {
  std::vector<std::string> names;
  for (const auto& [name, algorithm] : Registry()) names.push_back(name);
  return names;
}

Partition RunAlgorithm(const RunConfig& config,
                       const std::vector<OraclePtr>& oracles) {
  const auto it = Registry().find(config.algorithm);
  if (it == Registry().end()) {
    throw std::invalid_argument("unknown algorithm '" + config.algorithm + "'");
  }
  const Algorithm& algorithm = it->second;
  if (algorithm.direction != config.objective) {
    throw std::invalid_argument(
        config.algorithm + " solves " + DirectionName(algorithm.direction) +
        ", not " + DirectionName(config.objective));
  }
  if (!(config.lambda >= 0.0 && config.lambda <= 1.0)) {
    throw std::invalid_argument("lambda must be in [0, 1]");
  }
  if (algorithm.homogeneous_only && oracles.size() != 1) {
    throw std::invalid_argument(config.algorithm +
                                " needs a single (homogeneous) function");
  }
  CheckBlockOracles(oracles, config.m);
  return algorithm.run(config, oracles);
}

}  // namespace subpart
