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

// Reference implementations used only by tests. They follow the textbook
// definitions and share no code with the library.

#ifndef LOCXTRACT_TESTS_ORACLES_H_
#define LOCXTRACT_TESTS_ORACLES_H_

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace locxtract::testing {

// Levenshtein distance by its recursive definition, memoized on the
// prefix lengths:
//   lev(a, b) = |a|                                  if |b| = 0
//             = |b|                                  if |a| = 0
//             = lev(tail a, tail b)                  if a[0] = b[0]
//             = 1 + min(lev(tail a, b), lev(a, tail b), lev(tail a, tail b))
class RecursiveLevenshtein {
 public:
  RecursiveLevenshtein(std::u32string a, std::u32string b)
      : a_(std::move(a)), b_(std::move(b)) {}

  int operator()() { return Lev(0, 0); }

 private:
  int Lev(size_t i, size_t j) {
    if (i == a_.size()) return static_cast<int>(b_.size() - j);
    if (j == b_.size()) return static_cast<int>(a_.size() - i);
    const auto key = std::make_pair(i, j);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    int result;
    if (a_[i] == b_[j]) {
      result = Lev(i + 1, j + 1);
    } else {
      result = 1 + std::min({Lev(i + 1, j), Lev(i, j + 1), Lev(i + 1, j + 1)});
    }
    memo_[key] = result;
    return result;
  }

  std::u32string a_;
  std::u32string b_;
  std::map<std::pair<size_t, size_t>, int> memo_;
};

inline int OracleLevenshtein(const std::u32string& a, const std::u32string& b) {
  return RecursiveLevenshtein(a, b)();
}

// Exact rational 2L / (|a| + |b| + L) as (numerator, denominator).
struct Fraction {
  int64_t num = 0;
  int64_t den = 1;
};

inline Fraction OracleNormalized(const std::u32string& a,
                                 const std::u32string& b) {
  const int64_t l = OracleLevenshtein(a, b);
  if (l == 0) return {0, 1};
  return {2 * l, static_cast<int64_t>(a.size() + b.size()) + l};
}

inline bool LessEqual(Fraction x, Fraction y) {
  return x.num * y.den <= y.num * x.den;
}

inline Fraction Add(Fraction x, Fraction y) {
  return {x.num * y.den + y.num * x.den, x.den * y.den};
}

// Every string over `alphabet` of length 0..max_length.
inline std::vector<std::u32string> AllStrings(const std::u32string& alphabet,
                                              size_t max_length) {
  std::vector<std::u32string> out = {U""};
  size_t begin = 0;
  for (size_t length = 1; length <= max_length; ++length) {
    const size_t end = out.size();
    for (size_t i = begin; i < end; ++i) {
      for (char32_t c : alphabet) out.push_back(out[i] + c);
    }
    begin = end;
  }
  return out;
}

inline std::u32string RandomString(std::mt19937_64& rng,
                                   const std::u32string& alphabet,
                                   size_t max_length) {
  const size_t length = rng() % (max_length + 1);
  std::u32string s;
  for (size_t i = 0; i < length; ++i) s.push_back(alphabet[rng() % alphabet.size()]);
  return s;
}

}  // namespace locxtract::testing

#endif  // LOCXTRACT_TESTS_ORACLES_H_
