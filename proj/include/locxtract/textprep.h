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

#ifndef LOCXTRACT_TEXTPREP_H_
#define LOCXTRACT_TEXTPREP_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "locxtract/gazetteer.h"

namespace locxtract {

// A span of the symbol-free text that was rewritten. Offsets are in code
// points; hyphenation preserves length, so they are valid in both the
// input and the clean text.
struct Replacement {
  size_t start = 0;
  size_t end = 0;
  std::string replacement;
};

struct CleanText {
  std::string text;
  std::vector<Replacement> replacements;
};

// Deletes every '#' and '@'. Everything else stays in place.
std::string StripSymbols(std::string_view raw);

// Joins the words of multiword gazetteer names with hyphens so each name
// reaches the tokenizer as one token ("Boucle du Mouhoun" becomes
// "Boucle-du-Mouhoun"). Matching is case-insensitive, diacritic-sensitive,
// anchored at word boundaries, longest name first, left to right.
class MultiwordHyphenator {
 public:
  explicit MultiwordHyphenator(const Gazetteer& gazetteer);

  CleanText Apply(std::string_view text) const;

  size_t pattern_count() const { return patterns_.size(); }

 private:
  struct Pattern {
    std::u32string folded;  // words separated by a single U+0020
    size_t rank = 0;        // position in gazetteer name order
  };

  size_t MatchAt(const std::u32string& folded, size_t pos) const;

  std::vector<Pattern> patterns_;
  // First word -> pattern indices, longest pattern first, then file order.
  std::unordered_map<std::u32string, std::vector<size_t>> by_first_word_;
};

CleanText HyphenateMultiword(std::string_view text, const Gazetteer& gazetteer);

// StripSymbols then hyphenation, in that order so "#Boucle du Mouhoun"
// still joins.
CleanText Preprocess(std::string_view raw, const MultiwordHyphenator& hyphenator);
CleanText Preprocess(std::string_view raw, const Gazetteer& gazetteer);

// Characters that continue a word for boundary purposes.
bool IsWordChar(char32_t c);

}  // namespace locxtract

#endif  // LOCXTRACT_TEXTPREP_H_
