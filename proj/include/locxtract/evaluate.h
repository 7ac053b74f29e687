// Copyright 2026 The locxtract Authors.
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

#ifndef LOCXTRACT_EVALUATE_H_
#define LOCXTRACT_EVALUATE_H_

#include <chrono>
#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "locxtract/io.h"
#include "locxtract/pipeline.h"

namespace locxtract {

// One annotated text: the location names a reader expects to be found.
struct GoldRecord {
  std::string id;
  std::string text;
  std::vector<std::string> expected;
};

class IdMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Score {
  size_t correct = 0;
  size_t spurious = 0;

  friend bool operator==(const Score&, const Score&) = default;
};

// Set comparison of detected against expected names, by normalized key.
// Throws IdMismatch when the ids differ.
Score ScoreResult(const ExtractionResult& result, const GoldRecord& gold);

struct EvalRow {
  std::string id;
  std::vector<std::string> expected;
  std::vector<std::string> detected;
  size_t expected_count = 0;
  size_t correct = 0;
  size_t spurious = 0;
};

struct EvalReport {
  std::vector<EvalRow> rows;
  size_t total_expected = 0;
  size_t total_correct = 0;
  size_t total_spurious = 0;
  // Sum of correct over sum of expected; 1 for an empty denominator.
  double micro_recall = 1.0;
  // Sum of correct over sum of detected; 1 for an empty denominator.
  double micro_precision = 1.0;
  std::chrono::milliseconds runtime{0};
  PipelineConfig config;
  std::vector<std::string> warnings;
};

// Recomputes the micro averages and totals from the rows.
void Aggregate(EvalReport& report);

EvalReport EvaluateCorpus(const std::vector<GoldRecord>& gold,
                          const Extractor& extractor, size_t jobs = 1);

// Gold JSON lines: {"id": string, "text": string, "expected": [string]}.
// Duplicate ids and expected names that collide after normalization are
// reported as issues.
struct GoldBatch {
  std::vector<GoldRecord> records;
  std::vector<InputIssue> issues;
};
GoldBatch ReadGold(std::istream& in);

std::string GoldToJsonLine(const GoldRecord& record);

enum class ReportFormat { kMarkdown, kJson };

// Markdown mirrors a "#Text | Expected | Detected | Rate" table with an
// "Average Rate" footer; JSON carries rows, micro_recall,
// micro_precision, runtime_ms and the effective config.
std::string RenderReport(const EvalReport& report, ReportFormat format);

}  // namespace locxtract

#endif  // LOCXTRACT_EVALUATE_H_
