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

#include "subpart/cli/commands.h"

#include <charconv>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "subpart/bench/report.h"
#include "subpart/bench/suite.h"
#include "subpart/bench/synthetic.h"
#include "subpart/cli/image.h"
#include "subpart/cli/run_config.h"
#include "subpart/core/errors.h"
#include "subpart/functions/functions.h"
#include "subpart/functions/io.h"
#include "subpart/functions/similarity.h"
#include "subpart/robust/greedy.h"

namespace subpart {
namespace {

using ordered_json = nlohmann::ordered_json;

std::string Shortest(double value) {
  char buffer[32];
  const auto r = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, r.ptr);
}

void WriteText(const std::string& path, const std::string& text) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot open " + path + " for writing");
  file << text;
  file.flush();
  if (!file) throw IoError("failed writing " + path);
}

void Emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
  } else {
    WriteText(path, text);
  }
}

}  // namespace

int RunGuarded(std::ostream& err, const std::function<void()>& body) {
  try {
    body();
    return kExitOk;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitMisuse;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

int CmdPartition(const PartitionArgs& args, std::ostream& out,
                 std::ostream& err) {
  return RunGuarded(err, [&] {
    const RunConfig config = LoadRunConfig(args.config);
    const std::vector<OraclePtr> oracles = BuildOracles(config);
    const auto start = std::chrono::steady_clock::now();
    const Partition partition = RunAlgorithm(config, oracles);
    const double ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - start)
                          .count();
    const PartitionScore score = EvaluatePartition(
        MixedObjectiveSpec(config.objective, config.lambda, oracles, config.m),
        partition);
    ordered_json result;
    result["assignment"] = partition.assignment();
    result["block_values"] = score.block_values;
    result["objective"] = {{"worst", score.worst},
                           {"average", score.average},
                           {"mixed", score.mixed}};
    result["algorithm"] = config.algorithm;
    result["seed"] = config.seed;
    result["wallclock_ms"] = ms;
    Emit(args.out, result.dump(2) + "\n", out);
  });
}

int CmdBench(const BenchArgs& args, std::ostream& out, std::ostream& err) {
  return RunGuarded(err, [&] {
    if (args.out.empty()) throw std::invalid_argument("bench needs --out");
    SuiteConfig config;
    config.suite = ParseSuite(args.suite);
    config.instance.function = ParseSyntheticFunction(args.function);
    config.instance.n = args.n;
    config.instance.Validate();
    config.m_grid = args.m_grid;
    config.lambda_grid = args.lambda_grid;
    config.replicates = args.replicates;
    config.seeds = args.seeds;
    const BenchReport report = RunSuite(config);
    WriteReportCsv(report, args.out, args.timing);

    // Mean value over seeds per (m, lambda, algorithm), in report order.
    std::vector<std::string> keys;
    std::map<std::string, std::pair<double, int>> sums;
    for (const BenchRow& row : report.rows) {
      std::ostringstream key;
      key << std::setw(4) << row.m << std::setw(8) << Shortest(row.lambda)
          << "  " << std::left << std::setw(22) << row.algorithm;
      auto [it, inserted] = sums.try_emplace(key.str(), 0.0, 0);
      if (inserted) keys.push_back(key.str());
      it->second.first += row.value;
      it->second.second += 1;
    }
    out << std::setw(4) << "m" << std::setw(8) << "lambda" << "  " << std::left
        << std::setw(22) << "algorithm" << std::right << "mean value\n";
    for (const std::string& key : keys) {
      const auto& [sum, count] = sums[key];
      out << key << std::right << Shortest(sum / count) << "\n";
    }
    out << "wrote " << report.rows.size() << " rows to " << args.out << "\n";
  });
}

int CmdSplit(const SplitArgs& args, std::ostream& out, std::ostream& err) {
  return RunGuarded(err, [&] {
    OraclePtr f;
    if (args.function == "feature") {
      const FeatureTable table = ReadFeatureCsv(args.features, args.labels);
      f = FeatureBased(FeatureCounts::FromDenseRows(table.rows));
    } else if (args.function == "clustered-facility") {
      if (!args.labels) {
        throw std::invalid_argument(
            "clustered-facility needs a label column (--labels)");
      }
      const FeatureTable table = ReadFeatureCsv(args.features, true);
      f = ClusteredFacility(RbfSimilarity(table.rows, args.sigma, true),
                            table.labels);
    } else {
      throw std::invalid_argument("unknown split function '" + args.function +
                                  "' (feature or clustered-facility)");
    }
    const Partition partition = GreedMax(*f, args.m);
    const auto blocks = partition.Blocks();
    ordered_json result;
    result["function"] = args.function;
    result["m"] = args.m;
    result["sizes"] = partition.BlockSizes();
    result["blocks"] = blocks;
    std::vector<double> values;
    for (const auto& block : blocks) values.push_back(f->Evaluate(block));
    result["block_values"] = values;
    Emit(args.out, result.dump(2) + "\n", out);
  });
}

int CmdSegment(const SegmentArgs& args, std::ostream& out, std::ostream& err) {
  return RunGuarded(err, [&] {
    if (args.out.empty()) throw std::invalid_argument("segment needs --out");
    const Image image = ReadPnm(args.image);
    const Segmentation segmentation = SegmentImage(image, args.options);
    for (const auto& warning : segmentation.warnings) {
      err << "warning: " << warning << "\n";
    }
    WritePgm(args.out, LabelImage(segmentation));
    ordered_json sidecar;
    sidecar["width"] = segmentation.width;
    sidecar["height"] = segmentation.height;
    sidecar["m"] = segmentation.m;
    sidecar["labels"] = segmentation.labels;
    WriteText(args.out + ".json", sidecar.dump() + "\n");
    out << "wrote " << args.out << " (" << segmentation.width << "x"
        << segmentation.height << ", m=" << segmentation.m << ")\n";
  });
}

int CmdScore(const ScoreArgs& args, std::ostream& out, std::ostream& err) {
  return RunGuarded(err, [&] {
    const SegmentationScore score =
        ScoreLabelImage(ReadPnm(args.labels), ReadPnm(args.truth));
    out << "precision " << Shortest(score.precision) << "\n"
        << "recall " << Shortest(score.recall) << "\n"
        << "f_measure " << Shortest(score.f_measure) << "\n";
  });
}

}  // namespace subpart
