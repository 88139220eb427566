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

#ifndef SUBPART_FUNCTIONS_IO_H_
#define SUBPART_FUNCTIONS_IO_H_

#include <optional>
#include <string>
#include <vector>

#include "subpart/functions/similarity.h"

namespace subpart {

// Text readers for function inputs. Malformed contents raise ParseError
// with "path:line" context; unreadable files raise IoError.

// n rows of n comma-separated reals.
SimilarityMatrix ReadSimilarityCsv(const std::string& path);

// "item key" per line, 0-based. Item count and universe size default to
// one past the largest id seen.
BipartiteCover ReadEdgeList(const std::string& path,
                            std::optional<int> num_items = std::nullopt,
                            std::optional<int> universe_size = std::nullopt);

// "item feature count" per line, 0-based.
FeatureCounts ReadCountFile(const std::string& path,
                            std::optional<int> num_items = std::nullopt);

struct FeatureTable {
  std::vector<std::vector<double>> rows;
  std::vector<int> labels;  // empty unless a label column was requested
};

// One item per row, comma-separated reals; with `label_column`, the last
// column is read as an integer class label.
FeatureTable ReadFeatureCsv(const std::string& path, bool label_column);

// Whitespace- or comma-separated reals.
std::vector<double> ReadWeights(const std::string& path);

// Whitespace-separated integer labels.
std::vector<int> ReadLabels(const std::string& path);

// Parses one comma-separated line of reals; throws ParseError on failure.
std::vector<double> ParseCsvLine(const std::string& line,
                                 const std::string& context);

}  // namespace subpart

#endif  // SUBPART_FUNCTIONS_IO_H_
