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

#ifndef LOCXTRACT_IO_H_
#define LOCXTRACT_IO_H_

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "locxtract/pipeline.h"

namespace locxtract {

// kAuto treats a line starting with '{' as JSON and anything else as raw
// text.
enum class InputFormat { kAuto, kJsonl, kText };

struct InputIssue {
  size_t line = 0;
  std::string message;
};

struct DocumentBatch {
  std::vector<Document> documents;
  std::vector<InputIssue> issues;
};

// Reads {"id": ..., "text": ...} JSON lines, or raw text lines which get
// the id "line-<n>". Blank lines are skipped; bad lines are reported and
// skipped.
DocumentBatch ReadDocuments(std::istream& in, InputFormat format);

// {"id", "locations", "matches": [{"token", "canonical", "distance",
// "start", "end"}]} on one line, no trailing newline.
std::string ResultToJsonLine(const ExtractionResult& result);

// id<TAB>locations joined by ';'. Backslash, tab, newline, carriage return
// and ';' inside a field are backslash-escaped.
std::string ResultToTsvLine(const ExtractionResult& result);

std::string EscapeTsvField(std::string_view field);

}  // namespace locxtract

#endif  // LOCXTRACT_IO_H_
