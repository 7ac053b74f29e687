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

#ifndef LOCXTRACT_RECOGNIZER_H_
#define LOCXTRACT_RECOGNIZER_H_

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "locxtract/edit_distance.h"
#include "locxtract/fuzzy_index.h"
#include "locxtract/tokenizer.h"

namespace locxtract {

// Small bundled set of French function words, already normalized.
const std::unordered_set<std::string>& DefaultStopwords();

struct PipelineConfig {
  // A token is accepted when its normalized distance to the closest name
  // is at most this value.
  double threshold = 0.25;
  // Tokens shorter than this (in code points) only match exactly.
  size_t min_fuzzy_len = 4;
  std::unordered_set<std::string> stopwords = DefaultStopwords();
  bool dedupe = true;

  // Throws std::invalid_argument unless 0 < threshold <= 1 and
  // min_fuzzy_len >= 1.
  void Validate() const;
};

enum class SearchMode { kIndexed, kScan };

struct LocationMatch {
  Token token;  // the token, or hyphen-separated part of it, that matched
  std::string canonical;
  size_t entry = 0;
  NormalizedDistance distance;
  bool exact = false;

  double score() const { return distance.value(); }
};

// Looks up one normalized word; shared by both search modes.
std::optional<NameMatch> LookupWord(std::u32string_view word,
                                    const FuzzyIndex& index,
                                    const PipelineConfig& config,
                                    SearchMode mode);

// Resolves each token to its closest gazetteer name, if close enough.
// Tokens are normalized first; stopwords are skipped; a token that misses
// and contains internal hyphens is retried part by part. Matches come out
// in token order.
std::vector<LocationMatch> Recognize(const std::vector<Token>& tokens,
                                     const FuzzyIndex& index,
                                     const PipelineConfig& config,
                                     SearchMode mode = SearchMode::kIndexed);

}  // namespace locxtract

#endif  // LOCXTRACT_RECOGNIZER_H_
