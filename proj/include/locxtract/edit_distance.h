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

#ifndef LOCXTRACT_EDIT_DISTANCE_H_
#define LOCXTRACT_EDIT_DISTANCE_H_

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace locxtract {

// Unit-cost Levenshtein distance over code points. Two-row DP, memory
// proportional to the shorter argument.
int Levenshtein(std::u32string_view a, std::u32string_view b);

// Same, over the code points of two UTF-8 strings. No normalization is done.
int Levenshtein(std::string_view a, std::string_view b);

// Normalized Levenshtein metric 2L / (|a| + |b| + L), kept as an exact
// rational so that comparisons and ties never depend on rounding.
class NormalizedDistance {
 public:
  constexpr NormalizedDistance() = default;
  constexpr NormalizedDistance(int edits, int length_sum)
      : edits_(edits), length_sum_(length_sum) {}

  // The maximal distance, used before anything has been seen.
  static constexpr NormalizedDistance Max() { return {1, 1}; }

  constexpr int edits() const { return edits_; }
  constexpr int length_sum() const { return length_sum_; }
  constexpr int64_t numerator() const { return 2 * int64_t{edits_}; }
  constexpr int64_t denominator() const {
    return edits_ == 0 ? 1 : int64_t{length_sum_} + edits_;
  }

  double value() const {
    return static_cast<double>(numerator()) /
           static_cast<double>(denominator());
  }

  bool WithinCutoff(double cutoff) const {
    return static_cast<double>(numerator()) <=
           cutoff * static_cast<double>(denominator());
  }

  friend constexpr std::strong_ordering operator<=>(NormalizedDistance a,
                                                    NormalizedDistance b) {
    return a.numerator() * b.denominator() <=> b.numerator() * a.denominator();
  }
  friend constexpr bool operator==(NormalizedDistance a, NormalizedDistance b) {
    return (a <=> b) == 0;
  }

 private:
  int edits_ = 0;
  int length_sum_ = 0;
};

NormalizedDistance MakeNormalized(int edits, size_t length_a, size_t length_b);

NormalizedDistance NormalizedGld(std::u32string_view a, std::u32string_view b);
NormalizedDistance NormalizedGld(std::string_view a, std::string_view b);

// Largest raw edit count L with 2L / (m + n + L) <= cutoff, i.e. the search
// radius in raw-distance space for keys of length `key_length`.
int MaxEditsWithin(double cutoff, size_t query_length, size_t key_length);

// A query preprocessed for repeated distance computations against many
// keys (bit-parallel Myers/Hyyro algorithm for queries up to 64 code
// points, plain DP otherwise). Results are identical to Levenshtein().
class LevenshteinPattern {
 public:
  explicit LevenshteinPattern(std::u32string pattern);

  const std::u32string& pattern() const { return pattern_; }
  size_t size() const { return pattern_.size(); }

  int Distance(std::u32string_view text) const;

 private:
  uint64_t Mask(char32_t c) const;

  std::u32string pattern_;
  std::array<uint64_t, 128> ascii_masks_{};
  std::vector<std::pair<char32_t, uint64_t>> other_masks_;
};

}  // namespace locxtract

#endif  // LOCXTRACT_EDIT_DISTANCE_H_
