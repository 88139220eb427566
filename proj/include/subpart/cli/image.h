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

#ifndef SUBPART_CLI_IMAGE_H_
#define SUBPART_CLI_IMAGE_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace subpart {

// 8-bit raster, row-major, interleaved channels (1 = gray, 3 = RGB).
struct Image {
  int width = 0;
  int height = 0;
  int channels = 1;
  std::vector<std::uint8_t> pixels;

  std::uint8_t at(int x, int y, int c = 0) const {
    return pixels[(static_cast<std::size_t>(y) * width + x) * channels + c];
  }
  int size() const { return width * height; }
};

// Binary PGM (P5) or PPM (P6) with maxval 255. Anything else raises
// ParseError; `context` prefixes the message.
Image DecodePnm(std::string_view bytes, const std::string& context);
Image ReadPnm(const std::string& path);

// Binary PGM (P5); the image must have one channel.
std::string EncodePgm(const Image& image);
void WritePgm(const std::string& path, const Image& image);

// Nearest-neighbour resampling to max(1, round(factor * size)) per axis,
// 0 < factor <= 1. Output pixel (x, y) samples the source pixel containing
// its centre.
Image Downsample(const Image& image, double factor);

}  // namespace subpart

#endif  // SUBPART_CLI_IMAGE_H_
