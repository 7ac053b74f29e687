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

#include "locxtract/evaluate.h"

#include <algorithm>
#include <istream>
#include <set>
#include <sstream>
#include <unordered_set>

#include "json.hpp"
#include "locxtract/unicode.h"

namespace locxtract {

using ordered_json = nlohmann::ordered_json;

Score ScoreResult(const ExtractionResult& result, const GoldRecord& gold) {
  if (result.doc_id != gold.id) {
    throw IdMismatch("result '" + result.doc_id + "' scored against gold '" +
                     gold.id + "'");
  }
  std::unordered_set<std::string> expected;
  for (const std::string& name : gold.expected) {
    expected.insert(NormalizeName(name));
  }
  std::unordered_set<std::string> detected;
  for (const std::string& name : result.locations) {
    detected.insert(NormalizeName(name));
  }
  Score score;
  for (const std::string& key : detected) {
    if (expected.count(key) > 0) {
      ++score.correct;
    } else {
      ++score.spurious;
    }
  }
  return score;
}

void Aggregate(EvalReport& report) {
  report.total_expected = 0;
  report.total_correct = 0;
  report.total_spurious = 0;
  for (const EvalRow& row : report.rows) {
    report.total_expected += row.expected_count;
    report.total_correct += row.correct;
    report.total_spurious += row.spurious;
  }
  report.micro_recall =
      report.total_expected == 0
          ? 1.0
          : static_cast<double>(report.total_correct) / report.total_expected;
  const size_t detected = report.total_correct + report.total_spurious;
  report.micro_precision =
      detected == 0 ? 1.0
                    : static_cast<double>(report.total_correct) / detected;
}

EvalReport EvaluateCorpus(const std::vector<GoldRecord>& gold,
                          const Extractor& extractor, size_t jobs) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<Document> documents;
  documents.reserve(gold.size());
  for (const GoldRecord& record : gold) {
    documents.push_back({record.id, record.text});
  }
  const std::vector<ExtractionResult> results =
      extractor.ExtractAll(documents, jobs);

  EvalReport report;
  report.config = extractor.config();
  for (size_t i = 0; i < gold.size(); ++i) {
    const Score score = ScoreResult(results[i], gold[i]);
    std::unordered_set<std::string> keys;
    for (const std::string& name : gold[i].expected) {
      keys.insert(NormalizeName(name));
    }
    report.rows.push_back({gold[i].id, gold[i].expected, results[i].locations,
                           keys.size(), score.correct, score.spurious});
  }
  Aggregate(report);
  if (gold.empty()) report.warnings.push_back("corpus contains zero texts");
  report.runtime = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);
  return report;
}

GoldBatch ReadGold(std::istream& in) {
  GoldBatch batch;
  std::set<std::string> ids;
  std::string line;
  size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    GoldRecord record;
    try {
      const auto value = nlohmann::json::parse(line);
      const bool well_formed =
          value.is_object() && value.contains("id") &&
          value["id"].is_string() && value.contains("text") &&
          value["text"].is_string() && value.contains("expected") &&
          value["expected"].is_array() &&
          std::all_of(value["expected"].begin(), value["expected"].end(),
                      [](const auto& v) { return v.is_string(); });
      if (!well_formed) {
        batch.issues.push_back(
            {line_number,
             "expected an object with id, text and an expected string list"});
        continue;
      }
      record.id = value["id"].get<std::string>();
      record.text = value["text"].get<std::string>();
      record.expected = value["expected"].get<std::vector<std::string>>();
    } catch (const nlohmann::json::exception& e) {
      batch.issues.push_back({line_number, e.what()});
      continue;
    }
    if (!ids.insert(record.id).second) {
      batch.issues.push_back({line_number, "duplicate id '" + record.id + "'"});
      continue;
    }
    std::unordered_set<std::string> keys;
    bool distinct = true;
    for (const std::string& name : record.expected) {
      distinct = keys.insert(NormalizeName(name)).second && distinct;
    }
    if (!distinct) {
      batch.issues.push_back(
          {line_number, "expected names of '" + record.id +
                            "' are not distinct after normalization"});
      continue;
    }
    batch.records.push_back(std::move(record));
  }
  return batch;
}

std::string GoldToJsonLine(const GoldRecord& record) {
  ordered_json out;
  out["id"] = record.id;
  out["text"] = record.text;
  out["expected"] = record.expected;
  return out.dump(-1, ' ', false, ordered_json::error_handler_t::replace);
}

namespace {

std::string Fraction(size_t numerator, size_t denominator) {
  return std::to_string(numerator) + "/" + std::to_string(denominator);
}

std::string JoinNames(const std::vector<std::string>& names) {
  std::string out;
  for (const std::string& name : names) {
    if (!out.empty()) out += ' ';
    for (char c : name) {
      // Keep the table intact.
      if (c == '|') {
        out += "\\|";
      } else if (c == '\n' || c == '\r' || c == '\t') {
        out += ' ';
      } else {
        out += c;
      }
    }
  }
  return out;
}

ordered_json ConfigJson(const PipelineConfig& config) {
  std::vector<std::string> stopwords(config.stopwords.begin(),
                                     config.stopwords.end());
  std::sort(stopwords.begin(), stopwords.end());
  ordered_json out;
  out["threshold"] = config.threshold;
  out["min_fuzzy_len"] = config.min_fuzzy_len;
  out["dedupe"] = config.dedupe;
  out["stopwords"] = stopwords;
  return out;
}

std::string RenderMarkdown(const EvalReport& report) {
  std::ostringstream out;
  out << "| #Text | Expected | Detected | Rate |\n";
  out << "|---|---|---|---|\n";
  for (const EvalRow& row : report.rows) {
    out << "| " << row.id << " | " << JoinNames(row.expected) << " | "
        << JoinNames(row.detected) << " | "
        << Fraction(row.correct, row.expected_count) << " |\n";
  }
  out << "| Average Rate | | | "
      << Fraction(report.total_correct, report.total_expected) << " |\n";
  out << "\n";
  out << "micro_recall: " << ordered_json(report.micro_recall).dump() << "\n";
  out << "micro_precision: " << ordered_json(report.micro_precision).dump()
      << "\n";
  for (const std::string& warning : report.warnings) {
    out << "warning: " << warning << "\n";
  }
  return out.str();
}

std::string RenderJson(const EvalReport& report) {
  ordered_json out;
  ordered_json rows = ordered_json::array();
  for (const EvalRow& row : report.rows) {
    ordered_json r;
    r["id"] = row.id;
    r["expected"] = row.expected_count;
    r["correct"] = row.correct;
    r["spurious"] = row.spurious;
    r["rate"] = Fraction(row.correct, row.expected_count);
    r["expected_names"] = row.expected;
    r["detected_names"] = row.detected;
    rows.push_back(std::move(r));
  }
  out["rows"] = std::move(rows);
  out["micro_recall"] = report.micro_recall;
  out["micro_precision"] = report.micro_precision;
  out["average_rate"] = Fraction(report.total_correct, report.total_expected);
  out["runtime_ms"] = report.runtime.count();
  out["config"] = ConfigJson(report.config);
  out["warnings"] = report.warnings;
  return out.dump(2, ' ', false, ordered_json::error_handler_t::replace) +
         "\n";
}

}  // namespace

std::string RenderReport(const EvalReport& report, ReportFormat format) {
  return format == ReportFormat::kJson ? RenderJson(report)
                                       : RenderMarkdown(report);
}

}  // namespace locxtract
