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

#include "locxtract/tokenizer.h"

#include "locxtract/unicode.h"

namespace locxtract {

namespace {

bool IsApostrophe(char32_t c) { return c == U'\'' || c == U'’'; }

bool IsTokenChar(const std::u32string& s, size_t i) {
  const char32_t c = s[i];
  if (IsLetter(c) || IsDigit(c) || IsMark(c) || c == U'-' || c == U'_') {
    return true;
  }
  return IsApostrophe(c) && i > 0 && i + 1 < s.size() && IsLetter(s[i - 1]) &&
         IsLetter(s[i + 1]);
}

}  // namespace

std::vector<Token> Tokenize(std::string_view clean_text) {
  const std::u32string chars = ToUtf32(clean_text);
  std::vector<Token> tokens;
  size_t i = 0;
  while (i < chars.size()) {
    if (!IsTokenChar(chars, i)) {
      ++i;
      continue;
    }
    const size_t start = i;
    while (i < chars.size() && IsTokenChar(chars, i)) ++i;
    tokens.push_back(
        {ToUtf8(std::u32string_view(chars).substr(start, i - start)), start,
         i});
  }
  return tokens;
}

}  // namespace locxtract
