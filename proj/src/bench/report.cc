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

#include "subpart/bench/report.h"

#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <tuple>

#include "subpart/core/errors.h"

namespace subpart {
namespace {

std::string FormatReal(double x) {
  char buffer[64];
  const auto r = std::to_chars(buffer, buffer + sizeof(buffer), x);
  return std::string(buffer, r.ptr);
}

std::vector<std::string> SplitFields(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

template <typename T>
T ParseField(const std::string& text, const char* name, int line) {
  T value{};
  const auto r = std::from_chars(text.data(), text.data() + text.size(), value);
  if (r.ec != std::errc() || r.ptr != text.data() + text.size()) {
    throw ParseError("report line " + std::to_string(line) + ": bad " + name +
                     " '" + text + "'");
  }
  return value;
}

using CellKey =
    std::tuple<std::string, int, int, double, std::string, std::uint64_t>;

CellKey KeyOf(const BenchRow& row) {
  return {row.function, row.n, row.m, row.lambda, row.algorithm, row.seed};
}

}  // namespace

void WriteReportCsv(const BenchReport& report, std::ostream& out, bool timing) {
  out << kReportHeader << '\n';
  for (const BenchRow& row : report.rows) {
    out << row.function << ',' << row.n << ',' << row.m << ','
        << FormatReal(row.lambda) << ',' << row.algorithm << ',' << row.seed
        << ',' << FormatReal(row.value) << ','
        << (timing ? FormatReal(row.ms) : std::string("0")) << '\n';
  }
}

void WriteReportCsv(const BenchReport& report, const std::string& path,
                    bool timing) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path + " for writing");
  WriteReportCsv(report, out, timing);
  out.flush();
  if (!out) throw IoError("failed writing " + path);
}

BenchReport ReadReportCsv(std::istream& in) {
  BenchReport report;
  std::string line;
  if (!std::getline(in, line) || line != kReportHeader) {
    throw ParseError("report header must be '" + std::string(kReportHeader) +
                     "'");
  }
  int number = 1;
  while (std::getline(in, line)) {
    ++number;
    if (line.empty()) continue;
    const auto fields = SplitFields(line);
    if (fields.size() != 8) {
      throw ParseError("report line " + std::to_string(number) +
                       ": expected 8 fields, got " +
                       std::to_string(fields.size()));
    }
    BenchRow row;
    row.function = fields[0];
    row.n = ParseField<int>(fields[1], "n", number);
    row.m = ParseField<int>(fields[2], "m", number);
    row.lambda = ParseField<double>(fields[3], "lambda", number);
    row.algorithm = fields[4];
    row.seed = ParseField<std::uint64_t>(fields[5], "seed", number);
    row.value = ParseField<double>(fields[6], "value", number);
    row.ms = ParseField<double>(fields[7], "ms", number);
    report.rows.push_back(std::move(row));
  }
  return report;
}

BenchReport ReadReportCsv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  try {
    return ReadReportCsv(in);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

CompareSummary CompareReport(const BenchReport& report,
                             const BenchReport& reference, double threshold) {
  std::map<CellKey, const BenchRow*> reference_cells;
  for (const BenchRow& row : reference.rows) reference_cells[KeyOf(row)] = &row;
  std::map<CellKey, const BenchRow*> report_cells;
  for (const BenchRow& row : report.rows) report_cells[KeyOf(row)] = &row;

  CompareSummary summary;
  for (const BenchRow& row : report.rows) {
    const auto it = reference_cells.find(KeyOf(row));
    if (it == reference_cells.end()) {
      summary.uncovered.push_back(row);
      continue;
    }
    ++summary.compared;
    const double ref = it->second->value;
    const double relative = (row.value - ref) / std::max(std::abs(ref), 1e-12);
    if (std::abs(relative) > threshold) {
      summary.flagged.push_back({row, ref, relative});
    }
  }
  for (const BenchRow& row : reference.rows) {
    if (!report_cells.count(KeyOf(row))) summary.missing.push_back(row);
  }
  return summary;
}

}  // namespace subpart
