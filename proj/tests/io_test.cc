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

#include <gtest/gtest.h>

#include <nlohmann/json.hpp>
#include <sstream>
#include <string>

#include "locxtract/gazetteer.h"
#include "locxtract/pipeline.h"

namespace locxtract {
namespace {

TEST(ReadDocuments, Formats) {
  std::istringstream jsonl(
      R"({"id":"a","text":"Gorom"})" "\n\n" R"({"text":"x"})" "\n");
  const DocumentBatch j = ReadDocuments(jsonl, InputFormat::kJsonl);
  ASSERT_EQ(j.documents.size(), 1u);
  EXPECT_EQ(j.documents[0].id, "a");
  EXPECT_EQ(j.issues.size(), 1u);

  std::istringstream text("première ligne\n\ntroisième\n");
  const DocumentBatch t = ReadDocuments(text, InputFormat::kText);
  ASSERT_EQ(t.documents.size(), 2u);
  EXPECT_EQ(t.documents[0].id, "line-1");
  EXPECT_EQ(t.documents[1].id, "line-3");
}

TEST(EscapeTsvField, NoRawControlCharacters) {
  EXPECT_EQ(EscapeTsvField("a\tb\nc\\d;e\r"), "a\\tb\\nc\\\\d\\;e\\r");
  EXPECT_EQ(EscapeTsvField("Kéné Dougou"), "Kéné Dougou");
}

TEST(ResultLines, JsonAndTsv) {
  const LoadResult loaded =
      LoadGazetteerFromString("Gorom\tcommune\t\t\nDori\tcommune\t\t\n");
  const Extractor extractor(loaded.gazetteer);
  const ExtractionResult r = extractor.Extract("id\t1", "De Gorom à Doori");
  const auto json = nlohmann::json::parse(ResultToJsonLine(r));
  EXPECT_EQ(json["id"], "id\t1");
  EXPECT_EQ(json["locations"], nlohmann::json::array({"Gorom", "Dori"}));
  EXPECT_EQ(json["matches"][1]["token"], "Doori");
  EXPECT_EQ(json["matches"][1]["start"], 11);
  EXPECT_EQ(json["matches"][1]["end"], 16);
  const std::string tsv = ResultToTsvLine(r);
  EXPECT_EQ(tsv, "id\\t1\tGorom;Dori");
}

}  // namespace
}  // namespace locxtract
