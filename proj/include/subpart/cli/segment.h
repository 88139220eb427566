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

#ifndef SUBPART_CLI_SEGMENT_H_
#define SUBPART_CLI_SEGMENT_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "subpart/cli/image.h"

namespace subpart {

struct SegmentOptions {
  int m = 2;
  double lambda = 0.8;
  int knn = 10;
  // Resampling factor applied before partitioning; labels are mapped back
  // to the source resolution.
  double downsample = 1.0;
  std::uint64_t seed = 0;
  std::optional<int> subsample;

  void Validate() const;
};

struct Segmentation {
  int width = 0;
  int height = 0;
  int m = 0;
  std::vector<int> labels;  // per source pixel, row-major, in [0, m)
  std::vector<std::string> warnings;
};

// Pixels become 5-d features (R, G, B, x, y; gray images repeat the gray
// value), each scaled to [0, 1]. The pixels are partitioned by
// GeneralGreedMin on a kNN facility location function with similarity
// C - ||x_v - x_a||.
Segmentation SegmentImage(const Image& image, const SegmentOptions& options);

// Block i is drawn as floor(255 * i / (m - 1)).
Image LabelImage(const Segmentation& segmentation);

struct SegmentationScore {
  double precision = 0.0;
  double recall = 0.0;
  double f_measure = 0.0;
  int blocks = 0;
};

// Every block predicts foreground when at least half of its pixels are
// foreground in `truth`, background otherwise; the F-measure of that
// prediction is returned. When neither prediction nor truth has any
// foreground F is 1; when exactly one of them has none F is 0.
SegmentationScore ScoreSegmentation(const std::vector<int>& labels,
                                    const std::vector<bool>& truth);

// Label image (one block per distinct gray value) against a truth image
// whose pixels >= 128 are foreground. Dimensions must match.
SegmentationScore ScoreLabelImage(const Image& labels, const Image& truth);

}  // namespace subpart

#endif  // SUBPART_CLI_SEGMENT_H_
