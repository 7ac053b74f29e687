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

#ifndef LOCXTRACT_UNICODE_H_
#define LOCXTRACT_UNICODE_H_

#include <string>
#include <string_view>

namespace locxtract {

// UTF-8 <-> UTF-32 conversion. Ill-formed input sequences are replaced by
// U+FFFD; use IsValidUtf8 first when the caller must reject them.
std::u32string ToUtf32(std::string_view utf8);
std::string ToUtf8(std::u32string_view utf32);

bool IsValidUtf8(std::string_view bytes);

// Number of code points in a UTF-8 string.
size_t CodePointCount(std::string_view utf8);

bool IsLetter(char32_t c);
bool IsDigit(char32_t c);
bool IsMark(char32_t c);
bool IsWhitespace(char32_t c);

// Simple (1:1) case folding, so folded text keeps its code-point offsets.
char32_t FoldCase(char32_t c);

// Canonical composition (NFC) of a UTF-8 string.
std::string ComposeNfc(std::string_view utf8);

// Matching form of a location name: NFC, case folded, trimmed, internal
// whitespace runs collapsed to one ASCII space. Diacritics are kept.
std::string NormalizeName(std::string_view raw);

}  // namespace locxtract

#endif  // LOCXTRACT_UNICODE_H_
