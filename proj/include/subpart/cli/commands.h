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

#ifndef SUBPART_CLI_COMMANDS_H_
#define SUBPART_CLI_COMMANDS_H_

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "subpart/cli/segment.h"

namespace subpart {

inline constexpr int kExitOk = 0;
inline constexpr int kExitParse = 2;
inline constexpr int kExitMisuse = 3;
inline constexpr int kExitIo = 4;

// Runs `body`, printing any error to `err`. Returns kExitParse for
// ParseError, kExitIo for IoError, kExitMisuse for std::invalid_argument
// and 1 for anything else.
int RunGuarded(std::ostream& err, const std::function<void()>& body);

struct PartitionArgs {
  std::string config;
  std::string out;  // empty: stdout
};
// Result JSON: assignment, block_values, objective {worst, average, mixed},
// algorithm, seed, wallclock_ms.
int CmdPartition(const PartitionArgs& args, std::ostream& out,
                 std::ostream& err);

struct BenchArgs {
  std::string suite = "sfa0";
  std::string function = "facility";
  int n = 40;
  std::vector<int> m_grid = {2, 6, 10, 14};
  std::vector<double> lambda_grid = {0.25, 0.5, 0.75};
  int replicates = 100;
  std::vector<std::uint64_t> seeds = {0};
  std::string out;
  bool timing = true;
};
// Writes the CSV report to args.out and a summary table to `out`.
int CmdBench(const BenchArgs& args, std::ostream& out, std::ostream& err);

struct SplitArgs {
  std::string features;
  int m = 2;
  std::string function = "feature";  // or "clustered-facility"
  // The last CSV column is an integer class label.
  bool labels = false;
  double sigma = 1.0;  // RBF width for clustered-facility
  std::string out;     // empty: stdout
};
// GreedMax on the chosen function; JSON with blocks (item ids) and sizes.
int CmdSplit(const SplitArgs& args, std::ostream& out, std::ostream& err);

struct SegmentArgs {
  std::string image;
  SegmentOptions options;
  std::string out;  // label PGM; raw ids go to out + ".json"
};
int CmdSegment(const SegmentArgs& args, std::ostream& out, std::ostream& err);

struct ScoreArgs {
  std::string labels;
  std::string truth;
};
int CmdScore(const ScoreArgs& args, std::ostream& out, std::ostream& err);

}  // namespace subpart

#endif  // SUBPART_CLI_COMMANDS_H_
