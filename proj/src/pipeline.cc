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

#include "locxtract/pipeline.h"

#include <algorithm>
#include <unordered_set>

#include "locxtract/tokenizer.h"

namespace locxtract {

ExtractionResult Extract(std::string doc_id, std::string_view raw,
                         const MultiwordHyphenator& hyphenator,
                         const FuzzyIndex& index, const PipelineConfig& config,
                         SearchMode mode) {
  ExtractionResult result;
  result.doc_id = std::move(doc_id);
  const CleanText clean = Preprocess(raw, hyphenator);
  result.matches = Recognize(Tokenize(clean.text), index, config, mode);
  std::unordered_set<size_t> seen;
  for (const LocationMatch& match : result.matches) {
    if (config.dedupe && !seen.insert(match.entry).second) continue;
    result.locations.push_back(match.canonical);
  }
  return result;
}

Extractor::Extractor(const Gazetteer& gazetteer, PipelineConfig config)
    : config_(std::move(config)), hyphenator_(gazetteer), index_(gazetteer) {
  config_.Validate();
}

ExtractionResult Extractor::Extract(std::string doc_id, std::string_view raw,
                                    SearchMode mode) const {
  return locxtract::Extract(std::move(doc_id), raw, hyphenator_, index_,
                            config_, mode);
}

std::vector<ExtractionResult> Extractor::ExtractAll(
    const std::vector<Document>& documents, size_t jobs,
    SearchMode mode) const {
  std::vector<ExtractionResult> results(documents.size());
  ParallelFor(documents.size(), jobs, [&](size_t i) {
    results[i] = Extract(documents[i].id, documents[i].text, mode);
  });
  return results;
}

}  // namespace locxtract
