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

#include "subpart/cli/segment.h"

#include <map>
#include <stdexcept>

#include "subpart/functions/functions.h"
#include "subpart/functions/similarity.h"
#include "subpart/mixed/general_greed_min.h"

namespace subpart {

void SegmentOptions::Validate() const {
  if (m < 2) throw std::invalid_argument("segmentation needs m >= 2");
  if (!(lambda >= 0.0 && lambda <= 1.0)) {
    throw std::invalid_argument("lambda must be in [0, 1]");
  }
  if (knn < 1) throw std::invalid_argument("knn must be >= 1");
  if (!(downsample > 0.0 && downsample <= 1.0)) {
    throw std::invalid_argument("downsample factor must be in (0, 1]");
  }
  if (subsample && *subsample < 1) {
    throw std::invalid_argument("subsample must be >= 1");
  }
}

Segmentation SegmentImage(const Image& image, const SegmentOptions& options) {
  options.Validate();
  const Image small = Downsample(image, options.downsample);
  const int n = small.size();
  if (n < options.m) {
    throw std::invalid_argument("image has fewer pixels than blocks");
  }
  std::vector<std::vector<double>> features;
  features.reserve(n);
  for (int y = 0; y < small.height; ++y) {
    for (int x = 0; x < small.width; ++x) {
      std::vector<double> f(5);
      for (int c = 0; c < 3; ++c) {
        f[c] = small.at(x, y, small.channels == 3 ? c : 0);
      }
      f[3] = x;
      f[4] = y;
      features.push_back(std::move(f));
    }
  }
  KnnBuildResult knn =
      BuildKnnSimilarity(features, std::min(options.knn, n - 1), true);
  const OraclePtr f = FacilityLocation(std::move(knn.graph));
  const Partition partition = GeneralGreedMin(
      *f, options.m, options.lambda,
      {.subsample = options.subsample, .seed = options.seed});

  Segmentation result;
  result.width = image.width;
  result.height = image.height;
  result.m = options.m;
  result.warnings = std::move(knn.warnings);
  if (options.knn > n - 1) {
    result.warnings.push_back("knn " + std::to_string(options.knn) +
                              " clamped to " + std::to_string(n - 1));
  }
  result.labels.resize(image.size());
  for (int y = 0; y < image.height; ++y) {
    const int sy = static_cast<int>(
        static_cast<long long>(y) * small.height / image.height);
    for (int x = 0; x < image.width; ++x) {
      const int sx = static_cast<int>(
          static_cast<long long>(x) * small.width / image.width);
      result.labels[y * image.width + x] =
          partition.block_of(sy * small.width + sx);
    }
  }
  return result;
}

Image LabelImage(const Segmentation& segmentation) {
  if (segmentation.m < 2) throw std::invalid_argument("label image needs m >= 2");
  Image out;
  out.width = segmentation.width;
  out.height = segmentation.height;
  out.channels = 1;
  out.pixels.reserve(segmentation.labels.size());
  for (int label : segmentation.labels) {
    out.pixels.push_back(
        static_cast<std::uint8_t>(255 * label / (segmentation.m - 1)));
  }
  return out;
}

SegmentationScore ScoreSegmentation(const std::vector<int>& labels,
                                    const std::vector<bool>& truth) {
  if (labels.size() != truth.size()) {
    throw std::invalid_argument("label and truth sizes differ");
  }
  // block -> (foreground, background) counts
  std::map<int, std::pair<long long, long long>> counts;
  for (std::size_t v = 0; v < labels.size(); ++v) {
    auto& c = counts[labels[v]];
    (truth[v] ? c.first : c.second) += 1;
  }
  long long tp = 0, fp = 0, fn = 0;
  for (const auto& [block, c] : counts) {
    if (c.first >= c.second) {
      tp += c.first;
      fp += c.second;
    } else {
      fn += c.first;
    }
  }
  SegmentationScore score;
  score.blocks = static_cast<int>(counts.size());
  const long long predicted = tp + fp;
  const long long actual = tp + fn;
  if (predicted == 0 || actual == 0) {
    score.f_measure = predicted == actual ? 1.0 : 0.0;
    score.precision = predicted == 0 ? score.f_measure : 0.0;
    score.recall = actual == 0 ? score.f_measure : 0.0;
    return score;
  }
  score.precision = static_cast<double>(tp) / predicted;
  score.recall = static_cast<double>(tp) / actual;
  if (tp > 0) {
    score.f_measure = 2.0 * score.precision * score.recall /
                      (score.precision + score.recall);
  }
  return score;
}

SegmentationScore ScoreLabelImage(const Image& labels, const Image& truth) {
  if (labels.width != truth.width || labels.height != truth.height) {
    throw std::invalid_argument(
        "label image is " + std::to_string(labels.width) + "x" +
        std::to_string(labels.height) + " but truth is " +
        std::to_string(truth.width) + "x" + std::to_string(truth.height));
  }
  std::vector<int> ids(labels.size());
  std::vector<bool> fg(truth.size());
  for (int y = 0; y < labels.height; ++y) {
    for (int x = 0; x < labels.width; ++x) {
      ids[y * labels.width + x] = labels.at(x, y, 0);
      fg[y * labels.width + x] = truth.at(x, y, 0) >= 128;
    }
  }
  return ScoreSegmentation(ids, fg);
}

}  // namespace subpart
