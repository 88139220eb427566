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

#ifndef SUBPART_BENCH_REPORT_H_
#define SUBPART_BENCH_REPORT_H_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace subpart {

inline constexpr char kReportHeader[] =
    "function,n,m,lambda,algorithm,seed,value,ms";

struct BenchRow {
  std::string function;
  int n = 0;
  int m = 0;
  double lambda = 0.0;
  std::string algorithm;
  std::uint64_t seed = 0;
  double value = 0.0;
  double ms = 0.0;
};

// True objective after the initial partition and after every recorded round
// of an MMax or MMin run.
struct IterateTrace {
  std::string algorithm;
  int m = 0;
  std::uint64_t seed = 0;
  std::vector<double> objectives;
};

struct BenchReport {
  std::vector<BenchRow> rows;
  std::vector<IterateTrace> traces;
};

// Writes the CSV with LF line endings. Reals use the shortest decimal form
// that reads back to the same double. With `timing` false the ms column is
// written as 0.
void WriteReportCsv(const BenchReport& report, std::ostream& out,
                    bool timing = true);
void WriteReportCsv(const BenchReport& report, const std::string& path,
                    bool timing = true);

// Throws ParseError on a header or row that does not match the schema.
BenchReport ReadReportCsv(std::istream& in);
BenchReport ReadReportCsv(const std::string& path);

struct CellDiff {
  BenchRow row;
  double reference_value = 0.0;
  // (value - reference) / max(|reference|, 1e-12).
  double relative = 0.0;
};

struct CompareSummary {
  // Cells present in both reports whose relative change exceeds the
  // threshold.
  std::vector<CellDiff> flagged;
  // Report cells with no reference counterpart.
  std::vector<BenchRow> uncovered;
  // Reference cells absent from the report.
  std::vector<BenchRow> missing;
  int compared = 0;

  bool clean() const {
    return flagged.empty() && uncovered.empty() && missing.empty();
  }
};

// Matches cells on (function, n, m, lambda, algorithm, seed).
CompareSummary CompareReport(const BenchReport& report,
                             const BenchReport& reference,
                             double threshold = 0.01);

}  // namespace subpart

#endif  // SUBPART_BENCH_REPORT_H_
