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

#include "locxtract/edit_distance.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "locxtract/unicode.h"

namespace locxtract {

int Levenshtein(std::u32string_view a, std::u32string_view b) {
  if (a.size() < b.size()) std::swap(a, b);
  // b is now the shorter string; rows are indexed by it.
  std::vector<int> prev(b.size() + 1);
  std::vector<int> curr(b.size() + 1);
  std::iota(prev.begin(), prev.end(), 0);
  for (size_t i = 1; i <= a.size(); ++i) {
    curr[0] = static_cast<int>(i);
    for (size_t j = 1; j <= b.size(); ++j) {
      const int substitution = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
      curr[j] = std::min({prev[j] + 1, curr[j - 1] + 1, substitution});
    }
    std::swap(prev, curr);
  }
  return prev[b.size()];
}

int Levenshtein(std::string_view a, std::string_view b) {
  return Levenshtein(ToUtf32(a), ToUtf32(b));
}

NormalizedDistance MakeNormalized(int edits, size_t length_a,
                                  size_t length_b) {
  return NormalizedDistance(edits, static_cast<int>(length_a + length_b));
}

NormalizedDistance NormalizedGld(std::u32string_view a,
                                 std::u32string_view b) {
  return MakeNormalized(Levenshtein(a, b), a.size(), b.size());
}

NormalizedDistance NormalizedGld(std::string_view a, std::string_view b) {
  return NormalizedGld(ToUtf32(a), ToUtf32(b));
}

int MaxEditsWithin(double cutoff, size_t query_length, size_t key_length) {
  const int length_sum = static_cast<int>(query_length + key_length);
  // Closed form, then settle on the exact predicate used for acceptance.
  int edits = static_cast<int>(
      std::floor(cutoff * length_sum / (2.0 - cutoff)));
  edits = std::clamp(edits, 0, length_sum);
  while (edits < length_sum &&
         NormalizedDistance(edits + 1, length_sum).WithinCutoff(cutoff)) {
    ++edits;
  }
  while (edits > 0 && !NormalizedDistance(edits, length_sum).WithinCutoff(cutoff)) {
    --edits;
  }
  return edits;
}

LevenshteinPattern::LevenshteinPattern(std::u32string pattern)
    : pattern_(std::move(pattern)) {
  if (pattern_.size() > 64) return;
  for (size_t i = 0; i < pattern_.size(); ++i) {
    const char32_t c = pattern_[i];
    const uint64_t bit = uint64_t{1} << i;
    if (c < 128) {
      ascii_masks_[c] |= bit;
      continue;
    }
    auto it = std::find_if(other_masks_.begin(), other_masks_.end(),
                           [c](const auto& entry) { return entry.first == c; });
    if (it == other_masks_.end()) {
      other_masks_.emplace_back(c, bit);
    } else {
      it->second |= bit;
    }
  }
}

uint64_t LevenshteinPattern::Mask(char32_t c) const {
  if (c < 128) return ascii_masks_[c];
  for (const auto& [symbol, mask] : other_masks_) {
    if (symbol == c) return mask;
  }
  return 0;
}

int LevenshteinPattern::Distance(std::u32string_view text) const {
  const size_t m = pattern_.size();
  if (m == 0) return static_cast<int>(text.size());
  if (m > 64) return Levenshtein(pattern_, text);

  const uint64_t high = uint64_t{1} << (m - 1);
  uint64_t positive = ~uint64_t{0};
  uint64_t negative = 0;
  int score = static_cast<int>(m);
  for (char32_t c : text) {
    const uint64_t eq = Mask(c);
    const uint64_t xv = eq | negative;
    const uint64_t xh = (((eq & positive) + positive) ^ positive) | eq;
    uint64_t ph = negative | ~(xh | positive);
    uint64_t mh = positive & xh;
    if (ph & high) {
      ++score;
    } else if (mh & high) {
      --score;
    }
    // Row 0 grows by one per column for global alignment.
    ph = (ph << 1) | 1;
    mh <<= 1;
    positive = mh | ~(xv | ph);
    negative = ph & xv;
  }
  return score;
}

}  // namespace locxtract
