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

#ifndef LOCXTRACT_PIPELINE_H_
#define LOCXTRACT_PIPELINE_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "locxtract/fuzzy_index.h"
#include "locxtract/gazetteer.h"
#include "locxtract/internal/parallel.h"
#include "locxtract/recognizer.h"
#include "locxtract/textprep.h"

namespace locxtract {

struct Document {
  std::string id;
  std::string text;
};

struct ExtractionResult {
  std::string doc_id;
  std::vector<std::string> locations;  // canonical names, mention order
  std::vector<LocationMatch> matches;
};

// Runs preprocess -> tokenize -> recognize over already built stages.
ExtractionResult Extract(std::string doc_id, std::string_view raw,
                         const MultiwordHyphenator& hyphenator,
                         const FuzzyIndex& index, const PipelineConfig& config,
                         SearchMode mode = SearchMode::kIndexed);

// Owns every stage built from one gazetteer. The gazetteer is not
// referenced after construction. Thread-safe for concurrent Extract calls.
class Extractor {
 public:
  // Throws std::invalid_argument for an invalid config.
  Extractor(const Gazetteer& gazetteer, PipelineConfig config = {});

  const PipelineConfig& config() const { return config_; }
  const FuzzyIndex& index() const { return index_; }
  const MultiwordHyphenator& hyphenator() const { return hyphenator_; }

  ExtractionResult Extract(std::string doc_id, std::string_view raw,
                           SearchMode mode = SearchMode::kIndexed) const;

  // Extracts every document on `jobs` worker threads. The output is in
  // input order whatever the worker count.
  std::vector<ExtractionResult> ExtractAll(
      const std::vector<Document>& documents, size_t jobs = 1,
      SearchMode mode = SearchMode::kIndexed) const;

 private:
  PipelineConfig config_;
  MultiwordHyphenator hyphenator_;
  FuzzyIndex index_;
};

}  // namespace locxtract

#endif  // LOCXTRACT_PIPELINE_H_
