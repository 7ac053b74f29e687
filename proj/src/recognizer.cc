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

#include "locxtract/recognizer.h"

#include <stdexcept>

#include "locxtract/unicode.h"

namespace locxtract {

const std::unordered_set<std::string>& DefaultStopwords() {
  static const auto* const kStopwords = new std::unordered_set<std::string>{
      "a",      "à",     "au",    "aux",   "avec",  "ce",    "ces",
      "cette",  "d",     "dans",  "de",    "des",   "du",    "elle",
      "elles",  "en",    "entre", "est",   "et",    "été",   "il",
      "ils",    "l",     "la",    "le",    "les",   "leur",  "leurs",
      "lors",   "mais",  "ne",    "ni",    "nous",  "on",    "ont",
      "ou",     "où",    "par",   "pas",   "pour",  "près",  "qu",
      "que",    "qui",   "sa",    "sans",  "se",    "ses",   "son",
      "sont",   "sur",   "un",    "une",   "vers",  "vous",  "rt",
      "depuis", "après", "avant", "contre", "chez", "selon", "aussi",
      "très",   "plus",  "tout",  "tous",  "toute", "toutes"};
  return *kStopwords;
}

void PipelineConfig::Validate() const {
  if (!(threshold > 0.0 && threshold <= 1.0)) {
    throw std::invalid_argument("threshold must be in (0, 1]");
  }
  if (min_fuzzy_len < 1) {
    throw std::invalid_argument("min_fuzzy_len must be at least 1");
  }
}

std::optional<NameMatch> LookupWord(std::u32string_view word,
                                    const FuzzyIndex& index,
                                    const PipelineConfig& config,
                                    SearchMode mode) {
  const NameTable& names = index.names();
  if (word.size() < config.min_fuzzy_len) {
    auto exact = names.FindExact(word);
    if (!exact) return std::nullopt;
    return NameMatch{*exact, MakeNormalized(0, word.size(), word.size())};
  }
  if (mode == SearchMode::kIndexed) {
    return index.BestMatch(word, config.threshold);
  }
  auto best = BestMatchScan(word, names);
  if (best && !best->distance.WithinCutoff(config.threshold)) {
    return std::nullopt;
  }
  return best;
}

namespace {

// Matches one token without the hyphen retry.
std::optional<LocationMatch> MatchToken(const Token& token,
                                        const FuzzyIndex& index,
                                        const PipelineConfig& config,
                                        SearchMode mode) {
  const std::string normalized = NormalizeName(token.text);
  if (normalized.empty() || config.stopwords.count(normalized) > 0) {
    return std::nullopt;
  }
  const auto hit = LookupWord(MatchForm(normalized), index, config, mode);
  if (!hit) return std::nullopt;
  const NameTable& names = index.names();
  return LocationMatch{token, names.canonical(hit->name),
                       names.entry(hit->name), hit->distance,
                       hit->distance.edits() == 0};
}

// Hyphen-separated parts of a token, with their own offsets. Empty unless
// there are at least two non-empty parts.
std::vector<Token> HyphenParts(const Token& token) {
  const std::u32string chars = ToUtf32(token.text);
  std::vector<Token> parts;
  size_t start = 0;
  for (size_t i = 0; i <= chars.size(); ++i) {
    if (i < chars.size() && chars[i] != U'-') continue;
    if (i > start) {
      parts.push_back(
          {ToUtf8(std::u32string_view(chars).substr(start, i - start)),
           token.start + start, token.start + i});
    }
    start = i + 1;
  }
  if (parts.size() < 2) parts.clear();
  return parts;
}

}  // namespace

std::vector<LocationMatch> Recognize(const std::vector<Token>& tokens,
                                     const FuzzyIndex& index,
                                     const PipelineConfig& config,
                                     SearchMode mode) {
  std::vector<LocationMatch> matches;
  for (const Token& token : tokens) {
    if (auto match = MatchToken(token, index, config, mode)) {
      matches.push_back(std::move(*match));
      continue;
    }
    for (const Token& part : HyphenParts(token)) {
      if (auto match = MatchToken(part, index, config, mode)) {
        matches.push_back(std::move(*match));
      }
    }
  }
  return matches;
}

}  // namespace locxtract
