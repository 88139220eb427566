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

#include "subpart/cli/image.h"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <iterator>
#include <stdexcept>

#include "subpart/core/errors.h"

namespace subpart {
namespace {

class HeaderReader {
 public:
  HeaderReader(std::string_view bytes, const std::string& context)
      : bytes_(bytes), context_(context) {}

  // Next whitespace-delimited header token, skipping '#' comments.
  std::string_view Token() {
    for (;;) {
      while (pos_ < bytes_.size() &&
             std::isspace(static_cast<unsigned char>(bytes_[pos_]))) {
        ++pos_;
      }
      if (pos_ < bytes_.size() && bytes_[pos_] == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n') ++pos_;
        continue;
      }
      break;
    }
    const std::size_t start = pos_;
    while (pos_ < bytes_.size() &&
           !std::isspace(static_cast<unsigned char>(bytes_[pos_]))) {
      ++pos_;
    }
    if (start == pos_) Fail("truncated header");
    return bytes_.substr(start, pos_ - start);
  }

  int Integer(const char* what) {
    const std::string_view t = Token();
    int value = 0;
    for (char ch : t) {
      if (!std::isdigit(static_cast<unsigned char>(ch)) || value > 1'000'000) {
        Fail(std::string("bad ") + what + " '" + std::string(t) + "'");
      }
      value = value * 10 + (ch - '0');
    }
    return value;
  }

  // Consumes the single whitespace byte that ends the header.
  std::size_t DataStart() {
    if (pos_ >= bytes_.size() ||
        !std::isspace(static_cast<unsigned char>(bytes_[pos_]))) {
      Fail("truncated header");
    }
    return pos_ + 1;
  }

  [[noreturn]] void Fail(const std::string& message) const {
    throw ParseError(context_ + ": " + message);
  }

 private:
  std::string_view bytes_;
  const std::string& context_;
  std::size_t pos_ = 0;
};

}  // namespace

Image DecodePnm(std::string_view bytes, const std::string& context) {
  HeaderReader reader(bytes, context);
  const std::string_view magic = reader.Token();
  Image image;
  if (magic == "P5") {
    image.channels = 1;
  } else if (magic == "P6") {
    image.channels = 3;
  } else {
    reader.Fail("unsupported magic number '" + std::string(magic) +
                "' (expected P5 or P6)");
  }
  image.width = reader.Integer("width");
  image.height = reader.Integer("height");
  const int maxval = reader.Integer("maxval");
  if (image.width < 1 || image.height < 1) reader.Fail("empty image");
  if (maxval != 255) {
    reader.Fail("maxval " + std::to_string(maxval) + " is not supported");
  }
  const std::size_t start = reader.DataStart();
  const std::size_t count =
      static_cast<std::size_t>(image.width) * image.height * image.channels;
  if (bytes.size() - start < count) reader.Fail("truncated pixel data");
  image.pixels.assign(bytes.begin() + start, bytes.begin() + start + count);
  return image;
}

Image ReadPnm(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  const std::string bytes((std::istreambuf_iterator<char>(in)),
                          std::istreambuf_iterator<char>());
  return DecodePnm(bytes, path);
}

std::string EncodePgm(const Image& image) {
  if (image.channels != 1) {
    throw std::invalid_argument("PGM output needs a one-channel image");
  }
  std::string out = "P5\n" + std::to_string(image.width) + " " +
                    std::to_string(image.height) + "\n255\n";
  out.append(image.pixels.begin(), image.pixels.end());
  return out;
}

void WritePgm(const std::string& path, const Image& image) {
  const std::string bytes = EncodePgm(image);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw IoError("failed writing " + path);
}

Image Downsample(const Image& image, double factor) {
  if (!(factor > 0.0 && factor <= 1.0)) {
    throw std::invalid_argument("downsample factor must be in (0, 1]");
  }
  Image out;
  out.channels = image.channels;
  out.width = std::max(1, static_cast<int>(std::lround(factor * image.width)));
  out.height = std::max(1, static_cast<int>(std::lround(factor * image.height)));
  out.pixels.resize(static_cast<std::size_t>(out.width) * out.height *
                    out.channels);
  for (int y = 0; y < out.height; ++y) {
    const int sy = static_cast<int>((y + 0.5) * image.height / out.height);
    for (int x = 0; x < out.width; ++x) {
      const int sx = static_cast<int>((x + 0.5) * image.width / out.width);
      for (int c = 0; c < out.channels; ++c) {
        out.pixels[(static_cast<std::size_t>(y) * out.width + x) * out.channels +
                   c] = image.at(sx, sy, c);
      }
    }
  }
  return out;
}

}  // namespace subpart
