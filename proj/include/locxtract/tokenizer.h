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

#ifndef LOCXTRACT_TOKENIZER_H_
#define LOCXTRACT_TOKENIZER_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace locxtract {

// A token of the clean text. Offsets are code points, end exclusive.
struct Token {
  std::string text;
  size_t start = 0;
  size_t end = 0;

  friend bool operator==(const Token&, const Token&) = default;
};

// Splits clean text into maximal runs of token characters: letters,
// digits, combining marks, '-', '_', and an apostrophe (' or U+2019) that
// sits between two letters. Everything else separates tokens and is
// dropped.
std::vector<Token> Tokenize(std::string_view clean_text);

}  // namespace locxtract

#endif  // LOCXTRACT_TOKENIZER_H_
