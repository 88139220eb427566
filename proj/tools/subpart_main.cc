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

#include <iostream>

#include <CLI11.hpp>

#include "subpart/cli/commands.h"

int main(int argc, char** argv) {
  using namespace subpart;
  CLI::App app{"Submodular partitioning: robust, average-case and mixed objectives"};
  app.require_subcommand(1);

  PartitionArgs partition;
  auto* cmd_partition =
      app.add_subcommand("partition", "Partition a ground set from a JSON config");
  cmd_partition->add_option("config", partition.config, "Run config (JSON)")
      ->required();
  cmd_partition->add_option("--out", partition.out, "Result JSON (default stdout)");

  BenchArgs bench;
  auto* cmd_bench = app.add_subcommand("bench", "Run a synthetic benchmark suite");
  cmd_bench->add_option("--suite", bench.suite, "sfa0, slb0, mixed-max or mixed-min")
      ->capture_default_str();
  cmd_bench->add_option("--function", bench.function,
                        "facility, setcover or cardinality")
      ->capture_default_str();
  cmd_bench->add_option("--n", bench.n, "Ground set size")->capture_default_str();
  cmd_bench->add_option("--m-grid", bench.m_grid, "Block counts")
      ->delimiter(',')
      ->capture_default_str();
  cmd_bench->add_option("--lambda-grid", bench.lambda_grid,
                        "Lambda values (mixed suites)")
      ->delimiter(',')
      ->capture_default_str();
  cmd_bench->add_option("--replicates", bench.replicates,
                        "Balanced-random baseline replicates")
      ->capture_default_str();
  cmd_bench->add_option("--seed", bench.seeds, "Master seeds")
      ->delimiter(',')
      ->capture_default_str();
  cmd_bench->add_option("--out", bench.out, "CSV report path")->required();
  bool no_timing = false;
  cmd_bench->add_flag("--no-timing", no_timing, "Write 0 in the ms column");

  SplitArgs split;
  auto* cmd_split =
      app.add_subcommand("split", "Split a dataset into m balanced, diverse blocks");
  cmd_split->add_option("features", split.features, "Feature CSV")->required();
  cmd_split->add_option("--m", split.m, "Number of blocks")->capture_default_str();
  cmd_split->add_option("--function", split.function,
                        "feature or clustered-facility")
      ->capture_default_str();
  cmd_split->add_flag("--labels", split.labels,
                      "Last CSV column holds integer class labels");
  cmd_split->add_option("--sigma", split.sigma, "RBF width (clustered-facility)")
      ->capture_default_str();
  cmd_split->add_option("--out", split.out, "Result JSON (default stdout)");

  SegmentArgs segment;
  auto* cmd_segment =
      app.add_subcommand("segment", "Unsupervised segmentation of a PPM/PGM image");
  cmd_segment->add_option("image", segment.image, "Binary PPM (P6) or PGM (P5)")
      ->required();
  cmd_segment->add_option("--m", segment.options.m, "Number of segments")
      ->capture_default_str();
  cmd_segment->add_option("--lambda", segment.options.lambda,
                          "Average-case weight in [0, 1]")
      ->capture_default_str();
  cmd_segment->add_option("--knn", segment.options.knn, "Neighbours per pixel")
      ->capture_default_str();
  cmd_segment->add_option("--downsample", segment.options.downsample,
                          "Resampling factor in (0, 1]")
      ->capture_default_str();
  cmd_segment->add_option("--seed", segment.options.seed, "Seed for subsampling")
      ->capture_default_str();
  cmd_segment->add_option("--subsample", segment.options.subsample,
                          "Candidates scanned per greedy step");
  cmd_segment->add_option("--out", segment.out, "Label PGM")->required();

  ScoreArgs score;
  auto* cmd_score =
      app.add_subcommand("score", "F-measure of a label image against ground truth");
  cmd_score->add_option("labels", score.labels, "Label PGM")->required();
  cmd_score->add_option("truth", score.truth, "Truth PGM/PPM (>= 128 is foreground)")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParse;
  }

  if (*cmd_partition) return CmdPartition(partition, std::cout, std::cerr);
  if (*cmd_bench) {
    bench.timing = !no_timing;
    return CmdBench(bench, std::cout, std::cerr);
  }
  if (*cmd_split) return CmdSplit(split, std::cout, std::cerr);
  if (*cmd_segment) return CmdSegment(segment, std::cout, std::cerr);
  return CmdScore(score, std::cout, std::cerr);
}
