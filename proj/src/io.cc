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

#include "locxtract/io.h"

#include <istream>

#include "json.hpp"

namespace locxtract {

using ordered_json = nlohmann::ordered_json;

namespace {

bool LooksLikeJson(std::string_view line) {
  const size_t pos = line.find_first_not_of(" \t");
  return pos != std::string_view::npos && line[pos] == '{';
}

std::string Dump(const ordered_json& value) {
  return value.dump(-1, ' ', false, ordered_json::error_handler_t::replace);
}

}  // namespace

DocumentBatch ReadDocuments(std::istream& in, InputFormat format) {
  DocumentBatch batch;
  std::string line;
  size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    const bool json = format == InputFormat::kJsonl ||
                      (format == InputFormat::kAuto && LooksLikeJson(line));
    if (!json) {
      batch.documents.push_back({"line-" + std::to_string(line_number), line});
      continue;
    }
    try {
      const auto value = nlohmann::json::parse(line);
      if (!value.is_object() || !value.contains("id") ||
          !value["id"].is_string() || !value.contains("text") ||
          !value["text"].is_string()) {
        batch.issues.push_back(
            {line_number, "expected an object with string fields id and text"});
        continue;
      }
      batch.documents.push_back(
          {value["id"].get<std::string>(), value["text"].get<std::string>()});
    } catch (const nlohmann::json::exception& e) {
      batch.issues.push_back({line_number, e.what()});
    }
  }
  return batch;
}

std::string ResultToJsonLine(const ExtractionResult& result) {
  ordered_json out;
  out["id"] = result.doc_id;
  out["locations"] = result.locations;
  ordered_json matches = ordered_json::array();
  for (const LocationMatch& match : result.matches) {
    ordered_json m;
    m["token"] = match.token.text;
    m["canonical"] = match.canonical;
    m["distance"] = match.distance.value();
    m["start"] = match.token.start;
    m["end"] = match.token.end;
    matches.push_back(std::move(m));
  }
  out["matches"] = std::move(matches);
  return Dump(out);
}

std::string EscapeTsvField(std::string_view field) {
  std::string out;
  out.reserve(field.size());
  for (char c : field) {
    switch (c) {
      case '\\':
        out += "\\\\";
        break;
      case '\t':
        out += "\\t";
        break;
      case '\n':
        out += "\\n";
        break;
      case '\r':
        out += "\\r";
        break;
      case ';':
        out += "\\;";
        break;
      default:
        out += c;
    }
  }
  return out;
}

std::string ResultToTsvLine(const ExtractionResult& result) {
  std::string out = EscapeTsvField(result.doc_id);
  out += '\t';
  for (size_t i = 0; i < result.locations.size(); ++i) {
    if (i > 0) out += ';';
    out += EscapeTsvField(result.locations[i]);
  }
  return out;
}

}  // namespace locxtract
