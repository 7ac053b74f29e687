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

#include "locxtract/gazetteer.h"

#include <gtest/gtest.h>

#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "locxtract/corpusgen.h"
#include "locxtract/unicode.h"

namespace locxtract {
namespace {

std::vector<std::string> NameKeys(const Gazetteer& g) {
  std::vector<std::string> keys;
  for (const NameRef& ref : g.names()) keys.push_back(ref.key);
  return keys;
}

TEST(LoadGazetteer, SingleEntry) {
  const LoadResult r = LoadGazetteerFromString("Oudalan\tprovince\t\t\n");
  ASSERT_TRUE(r.ok());
  ASSERT_EQ(r.gazetteer.size(), 1u);
  const GazetteerEntry& e = r.gazetteer.entries()[0];
  EXPECT_EQ(e.canonical, "Oudalan");
  EXPECT_EQ(e.key, "oudalan");
  EXPECT_EQ(e.level, Level::kProvince);
  EXPECT_FALSE(e.parent.has_value());
  EXPECT_TRUE(e.aliases.empty());
}

TEST(LoadGazetteer, DuplicateKey) {
  const LoadResult r =
      LoadGazetteerFromString("Gorom\tcommune\t\t\nGOROM\tvillage\t\t\n");
  ASSERT_EQ(r.issues.size(), 1u);
  EXPECT_EQ(r.issues[0].error, LoadError::kDuplicateKey);
  EXPECT_EQ(r.issues[0].line, 2u);
  EXPECT_EQ(r.gazetteer.size(), 1u);
}

TEST(LoadGazetteer, AliasCollisionIsDuplicateKey) {
  const LoadResult r =
      LoadGazetteerFromString("Gorom\tcommune\t\tGorom-Gorom\nGorom-gorom\tvillage\t\t\n");
  ASSERT_EQ(r.issues.size(), 1u);
  EXPECT_EQ(r.issues[0].error, LoadError::kDuplicateKey);
}

TEST(LoadGazetteer, BadLevelAndMalformed) {
  const LoadResult r = LoadGazetteerFromString(
      "# comment\n"
      "Gorom\ttown\t\t\n"
      "Seno\tprovince\n"
      "\n"
      "Poni\tprovince\t\t\textra\n"
      "Deou\tcommune\tOudalan\t\n");
  ASSERT_EQ(r.issues.size(), 3u);
  EXPECT_EQ(r.issues[0].error, LoadError::kBadLevel);
  EXPECT_EQ(r.issues[0].line, 2u);
  EXPECT_EQ(r.issues[1].error, LoadError::kMalformedLine);
  EXPECT_EQ(r.issues[1].line, 3u);
  EXPECT_EQ(r.issues[2].error, LoadError::kMalformedLine);
  ASSERT_EQ(r.gazetteer.size(), 1u);
  EXPECT_EQ(r.gazetteer.entries()[0].parent, "Oudalan");
}

TEST(LoadGazetteer, InvalidUtf8IsMalformed) {
  const LoadResult r = LoadGazetteerFromString("Go\xFFrom\tcommune\t\t\n");
  ASSERT_EQ(r.issues.size(), 1u);
  EXPECT_EQ(r.issues[0].error, LoadError::kMalformedLine);
}

TEST(LoadGazetteer, Multiword) {
  const LoadResult r = LoadGazetteerFromString(
      "Gorom\tcommune\t\t\n"
      "Boucle du Mouhoun\tregion\t\t\n"
      "Kéné Dougou\tprovince\t\t\n");
  ASSERT_TRUE(r.ok());
  const auto& mw = r.gazetteer.multiword();
  ASSERT_EQ(mw.size(), 2u);
  EXPECT_EQ(r.gazetteer.entries()[mw[0]].canonical, "Boucle du Mouhoun");
  EXPECT_EQ(r.gazetteer.entries()[mw[1]].canonical, "Kéné Dougou");
}

TEST(IterateNames, OrderIsEntriesThenAliases) {
  const LoadResult r = LoadGazetteerFromString("A\tunknown\t\t\nB\tunknown\t\tb2\n");
  ASSERT_TRUE(r.ok());
  EXPECT_EQ(NameKeys(r.gazetteer), (std::vector<std::string>{"a", "b", "b2"}));
  EXPECT_EQ(r.gazetteer.names()[2].entry, 1u);
  EXPECT_TRUE(r.gazetteer.names()[2].alias);
}

TEST(IterateNames, Empty) {
  EXPECT_TRUE(Gazetteer().names().empty());
  EXPECT_TRUE(LoadGazetteerFromString("").gazetteer.names().empty());
}

TEST(IterateNames, ReferenceNameCount) {
  // Per-row counts of the reference expected-name column.
  const std::vector<size_t> counts = {2, 3, 3, 2, 2, 2, 2, 2, 3, 2,
                                      4, 2, 4, 3, 2, 2, 4, 2, 2, 2};
  const auto& lists = ReferenceNameLists();
  ASSERT_EQ(lists.size(), counts.size());
  std::set<std::string> distinct;
  for (size_t i = 0; i < lists.size(); ++i) {
    EXPECT_EQ(lists[i].size(), counts[i]) << "row " << i + 1;
    distinct.insert(lists[i].begin(), lists[i].end());
  }
  EXPECT_EQ(std::accumulate(counts.begin(), counts.end(), size_t{0}), 50u);
  EXPECT_EQ(distinct.size(), 45u);
  EXPECT_EQ(ReferenceGazetteer().names().size(), distinct.size());
}

TEST(Gazetteer, PropertyInvariantsOnSyntheticData) {
  for (uint64_t seed = 1; seed <= 200; ++seed) {
    const std::string tsv = SyntheticGazetteerTsv(40, seed);
    const LoadResult a = LoadGazetteerFromString(tsv);
    const LoadResult b = LoadGazetteerFromString(tsv);
    ASSERT_TRUE(a.ok()) << seed;
    ASSERT_EQ(ToTsv(a.gazetteer), ToTsv(b.gazetteer));
    std::set<std::string> keys;
    size_t multiword = 0;
    for (size_t i = 0; i < a.gazetteer.size(); ++i) {
      const GazetteerEntry& e = a.gazetteer.entries()[i];
      ASSERT_EQ(e.key, NormalizeName(e.canonical));
      ASSERT_EQ(a.gazetteer.Find(e.key), &e);
      ASSERT_TRUE(keys.insert(e.key).second);
      for (const std::string& alias : e.alias_keys) {
        ASSERT_TRUE(keys.insert(alias).second);
      }
      if (WordCount(e.key) >= 2) ++multiword;
    }
    ASSERT_EQ(a.gazetteer.multiword().size(), multiword);
    for (size_t i = 1; i < a.gazetteer.multiword().size(); ++i) {
      const auto& entries = a.gazetteer.entries();
      const auto& mw = a.gazetteer.multiword();
      ASSERT_GE(WordCount(entries[mw[i - 1]].key), WordCount(entries[mw[i]].key));
    }
    // Re-serialising and loading reproduces the gazetteer.
    ASSERT_EQ(ToTsv(LoadGazetteerFromString(ToTsv(a.gazetteer)).gazetteer),
              ToTsv(a.gazetteer));
  }
}

TEST(Gazetteer, AliasDuplicatesDropped) {
  GazetteerBuilder builder;
  EXPECT_FALSE(builder
                   .Add("Gorom-Gorom", Level::kCommune, {},
                        {"Gorom", "GOROM", "Gorom-Gorom", " "})
                   .has_value());
  const Gazetteer g = std::move(builder).Build();
  ASSERT_EQ(g.size(), 1u);
  EXPECT_EQ(g.entries()[0].aliases, (std::vector<std::string>{"Gorom"}));
  EXPECT_EQ(g.Find("gorom"), &g.entries()[0]);
  EXPECT_EQ(g.names().size(), 2u);
}

TEST(Gazetteer, UnresolvedParents) {
  const LoadResult r = LoadGazetteerFromString(
      "Oudalan\tprovince\t\t\nGorom\tcommune\tOudalan\t\nDeou\tcommune\tNowhere\t\n");
  ASSERT_TRUE(r.ok());
  EXPECT_EQ(r.gazetteer.UnresolvedParents(), (std::vector<size_t>{2}));
}

TEST(LoadGazetteerFile, MissingFileThrows) {
  EXPECT_ANY_THROW(LoadGazetteerFile("/nonexistent/gazetteer.tsv"));
}

}  // namespace
}  // namespace locxtract
