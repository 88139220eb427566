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

#include "subpart/functions/io.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <utility>

#include "subpart/core/errors.h"

namespace subpart {
namespace {

std::ifstream OpenOrThrow(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  return in;
}

std::string Trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

double ParseDouble(const std::string& token, const std::string& context) {
  const std::string t = Trim(token);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
  if (t.empty() || ec != std::errc() || ptr != t.data() + t.size() ||
      !std::isfinite(value)) {
    throw ParseError(context + ": expected a real number, got '" + t + "'");
  }
  return value;
}

long long ParseInt(const std::string& token, const std::string& context) {
  const std::string t = Trim(token);
  long long value = 0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
  if (t.empty() || ec != std::errc() || ptr != t.data() + t.size()) {
    throw ParseError(context + ": expected an integer, got '" + t + "'");
  }
  return value;
}

std::string Where(const std::string& path, int line) {
  return path + ":" + std::to_string(line);
}

// Splits a whitespace-separated record into exactly `arity` tokens.
std::vector<std::string> Fields(const std::string& line, std::size_t arity,
                                const std::string& context) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string token;
  while (in >> token) out.push_back(token);
  if (out.size() != arity) {
    throw ParseError(context + ": expected " + std::to_string(arity) +
                     " fields, got " + std::to_string(out.size()));
  }
  return out;
}

bool Blank(const std::string& line) {
  const std::string t = Trim(line);
  return t.empty() || t[0] == '#';
}

}  // namespace

std::vector<double> ParseCsvLine(const std::string& line,
                                 const std::string& context) {
  std::vector<double> values;
  std::stringstream in(line);
  std::string cell;
  while (std::getline(in, cell, ',')) values.push_back(ParseDouble(cell, context));
  return values;
}

SimilarityMatrix ReadSimilarityCsv(const std::string& path) {
  auto in = OpenOrThrow(path);
  std::vector<std::vector<double>> rows;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (Blank(line)) continue;
    rows.push_back(ParseCsvLine(line, Where(path, line_no)));
  }
  try {
    return SimilarityMatrix::FromRows(rows);
  } catch (const std::invalid_argument& e) {
    throw ParseError(path + ": " + e.what());
  }
}

BipartiteCover ReadEdgeList(const std::string& path,
                            std::optional<int> num_items,
                            std::optional<int> universe_size) {
  auto in = OpenOrThrow(path);
  std::vector<std::pair<int, int>> edges;
  int max_item = -1;
  int max_key = -1;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (Blank(line)) continue;
    const auto ctx = Where(path, line_no);
    const auto f = Fields(line, 2, ctx);
    const long long item = ParseInt(f[0], ctx);
    const long long key = ParseInt(f[1], ctx);
    if (item < 0 || key < 0 || item > 1 << 30 || key > 1 << 30) {
      throw ParseError(ctx + ": ids must be nonnegative");
    }
    edges.emplace_back(static_cast<int>(item), static_cast<int>(key));
    max_item = std::max(max_item, static_cast<int>(item));
    max_key = std::max(max_key, static_cast<int>(key));
  }
  const int n = num_items.value_or(max_item + 1);
  const int u = universe_size.value_or(max_key + 1);
  if (max_item >= n || max_key >= u) {
    throw ParseError(path + ": ids exceed the declared sizes");
  }
  std::vector<std::vector<int>> keys(n);
  for (const auto& [item, key] : edges) keys[item].push_back(key);
  return BipartiteCover::Make(u, std::move(keys));
}

FeatureCounts ReadCountFile(const std::string& path,
                            std::optional<int> num_items) {
  auto in = OpenOrThrow(path);
  struct Entry {
    int item, feature;
    double count;
  };
  std::vector<Entry> entries;
  int max_item = -1;
  int max_feature = -1;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (Blank(line)) continue;
    const auto ctx = Where(path, line_no);
    const auto f = Fields(line, 3, ctx);
    const long long item = ParseInt(f[0], ctx);
    const long long feature = ParseInt(f[1], ctx);
    const double count = ParseDouble(f[2], ctx);
    if (item < 0 || feature < 0 || count < 0.0) {
      throw ParseError(ctx + ": ids and counts must be nonnegative");
    }
    entries.push_back(
        {static_cast<int>(item), static_cast<int>(feature), count});
    max_item = std::max(max_item, static_cast<int>(item));
    max_feature = std::max(max_feature, static_cast<int>(feature));
  }
  const int n = num_items.value_or(max_item + 1);
  if (max_item >= n) throw ParseError(path + ": item id exceeds item count");
  std::vector<std::vector<std::pair<int, double>>> counts(n);
  for (const auto& e : entries) counts[e.item].emplace_back(e.feature, e.count);
  return FeatureCounts::Make(max_feature + 1, std::move(counts));
}

FeatureTable ReadFeatureCsv(const std::string& path, bool label_column) {
  auto in = OpenOrThrow(path);
  FeatureTable table;
  std::string line;
  int line_no = 0;
  std::size_t width = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (Blank(line)) continue;
    const auto ctx = Where(path, line_no);
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (width == 0) width = cells.size();
    if (cells.size() != width) {
      throw ParseError(ctx + ": expected " + std::to_string(width) +
                       " columns, got " + std::to_string(cells.size()));
    }
    const std::size_t d = label_column ? cells.size() - 1 : cells.size();
    if (d < 1) throw ParseError(ctx + ": no feature columns");
    std::vector<double> row(d);
    for (std::size_t c = 0; c < d; ++c) row[c] = ParseDouble(cells[c], ctx);
    table.rows.push_back(std::move(row));
    if (label_column) {
      table.labels.push_back(static_cast<int>(ParseInt(cells.back(), ctx)));
    }
  }
  if (table.rows.empty()) throw ParseError(path + ": no rows");
  return table;
}

std::vector<double> ReadWeights(const std::string& path) {
  auto in = OpenOrThrow(path);
  std::vector<double> weights;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (Blank(line)) continue;
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream tokens(line);
    std::string token;
    while (tokens >> token) {
      weights.push_back(ParseDouble(token, Where(path, line_no)));
    }
  }
  if (weights.empty()) throw ParseError(path + ": no weights");
  return weights;
}

std::vector<int> ReadLabels(const std::string& path) {
  auto in = OpenOrThrow(path);
  std::vector<int> labels;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (Blank(line)) continue;
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream tokens(line);
    std::string token;
    while (tokens >> token) {
      labels.push_back(
          static_cast<int>(ParseInt(token, Where(path, line_no))));
    }
  }
  return labels;
}

}  // namespace subpart
