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

#include "locxtract/textprep.h"

#include <algorithm>

#include "locxtract/unicode.h"

namespace locxtract {

bool IsWordChar(char32_t c) {
  return c == U'-' || c == U'_' || IsLetter(c) || IsDigit(c) || IsMark(c);
}

std::string StripSymbols(std::string_view raw) {
  std::string out;
  out.reserve(raw.size());
  for (char c : raw) {
    if (c != '#' && c != '@') out.push_back(c);
  }
  return out;
}

MultiwordHyphenator::MultiwordHyphenator(const Gazetteer& gazetteer) {
  const auto& names = gazetteer.multiword_names();
  for (size_t rank = 0; rank < names.size(); ++rank) {
    patterns_.push_back({ToUtf32(names[rank].key), rank});
  }
  for (size_t i = 0; i < patterns_.size(); ++i) {
    const std::u32string& folded = patterns_[i].folded;
    by_first_word_[folded.substr(0, folded.find(U' '))].push_back(i);
  }
  for (auto& [word, candidates] : by_first_word_) {
    std::stable_sort(candidates.begin(), candidates.end(),
                     [this](size_t a, size_t b) {
                       return patterns_[a].folded.size() >
                              patterns_[b].folded.size();
                     });
  }
}

size_t MultiwordHyphenator::MatchAt(const std::u32string& folded,
                                    size_t pos) const {
  size_t word_end = pos;
  while (word_end < folded.size() && !IsWhitespace(folded[word_end])) {
    ++word_end;
  }
  auto it = by_first_word_.find(folded.substr(pos, word_end - pos));
  if (it == by_first_word_.end()) return 0;
  for (size_t index : it->second) {
    const std::u32string& pattern = patterns_[index].folded;
    if (pos + pattern.size() > folded.size()) continue;
    bool matched = true;
    for (size_t k = 0; k < pattern.size() && matched; ++k) {
      const char32_t c = folded[pos + k];
      matched = pattern[k] == U' ' ? IsWhitespace(c) : pattern[k] == c;
    }
    const size_t end = pos + pattern.size();
    if (matched && (end == folded.size() || !IsWordChar(folded[end]))) {
      return pattern.size();
    }
  }
  return 0;
}

CleanText MultiwordHyphenator::Apply(std::string_view text) const {
  CleanText out;
  if (patterns_.empty()) {
    out.text = std::string(text);
    return out;
  }
  std::u32string chars = ToUtf32(text);
  std::u32string folded(chars.size(), U'\0');
  std::transform(chars.begin(), chars.end(), folded.begin(), FoldCase);

  bool changed = false;
  size_t pos = 0;
  while (pos < chars.size()) {
    const bool at_word_start =
        IsWordChar(chars[pos]) && (pos == 0 || !IsWordChar(chars[pos - 1]));
    const size_t length = at_word_start ? MatchAt(folded, pos) : 0;
    if (length == 0) {
      ++pos;
      continue;
    }
    for (size_t k = pos; k < pos + length; ++k) {
      if (IsWhitespace(chars[k])) chars[k] = U'-';
    }
    out.replacements.push_back(
        {pos, pos + length,
         ToUtf8(std::u32string_view(chars).substr(pos, length))});
    changed = true;
    pos += length;
  }
  out.text = changed ? ToUtf8(chars) : std::string(text);
  return out;
}

CleanText HyphenateMultiword(std::string_view text,
                             const Gazetteer& gazetteer) {
  return MultiwordHyphenator(gazetteer).Apply(text);
}

CleanText Preprocess(std::string_view raw,
                     const MultiwordHyphenator& hyphenator) {
  return hyphenator.Apply(StripSymbols(raw));
}

CleanText Preprocess(std::string_view raw, const Gazetteer& gazetteer) {
  return Preprocess(raw, MultiwordHyphenator(gazetteer));
}

}  // namespace locxtract
