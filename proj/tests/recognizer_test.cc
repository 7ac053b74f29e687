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

#include "locxtract/recognizer.h"

#include <gtest/gtest.h>

#include <random>
#include <string>

#include "generators.h"
#include "locxtract/gazetteer.h"
#include "locxtract/textprep.h"
#include "locxtract/tokenizer.h"

namespace locxtract {
namespace {

Gazetteer MakeGazetteer(std::string_view tsv) {
  LoadResult r = LoadGazetteerFromString(tsv);
  EXPECT_TRUE(r.ok());
  return std::move(r.gazetteer);
}

const Gazetteer& Est() {
  static const Gazetteer* const g = new Gazetteer(MakeGazetteer(
      "Tanwalbougou\tvillage\t\t\n"
      "Ougarou\tvillage\t\t\n"
      "Deou\tcommune\t\t\n"
      "Gorom-Gorom\tcommune\t\tGorom\n"
      "Boucle du Mouhoun\tregion\t\t\n"
      "Dori\tcommune\t\t\n"));
  return *g;
}

std::vector<std::string> Canonicals(const std::vector<LocationMatch>& matches) {
  std::vector<std::string> out;
  for (const auto& m : matches) out.push_back(m.canonical);
  return out;
}

using Strings = std::vector<std::string>;

TEST(Recognize, ExactPair) {
  const FuzzyIndex index(Est());
  const auto matches =
      Recognize({{"Tanwalbougou", 0, 12}, {"Ougarou", 13, 20}}, index, {});
  EXPECT_EQ(Canonicals(matches), (Strings{"Tanwalbougou", "Ougarou"}));
  for (const auto& m : matches) {
    EXPECT_TRUE(m.exact);
    EXPECT_EQ(m.score(), 0.0);
  }
}

TEST(Recognize, ShortWordNeedsExactHit) {
  const FuzzyIndex index(Est());
  EXPECT_TRUE(Recognize({{"de", 0, 2}}, index, {}).empty());
  EXPECT_TRUE(Recognize({{"Dor", 0, 3}}, index, {}).empty());
  PipelineConfig config;
  config.stopwords.clear();
  config.min_fuzzy_len = 2;
  config.threshold = 0.5;
  // With the guards relaxed "de" is 2/6 from "deou".
  EXPECT_EQ(Canonicals(Recognize({{"de", 0, 2}}, index, config)), (Strings{"Deou"}));
}

TEST(Recognize, HyphenSplitRetry) {
  const FuzzyIndex index(Est());
  const auto matches = Recognize({{"Tanwalbougou-Ougarou", 6, 26}}, index, {});
  ASSERT_EQ(Canonicals(matches), (Strings{"Tanwalbougou", "Ougarou"}));
  EXPECT_EQ(matches[0].token, (Token{"Tanwalbougou", 6, 18}));
  EXPECT_EQ(matches[1].token, (Token{"Ougarou", 19, 26}));
}

TEST(Recognize, WholeHyphenatedNameWins) {
  const FuzzyIndex index(Est());
  EXPECT_EQ(Canonicals(Recognize({{"Gorom-Gorom", 0, 11}}, index, {})),
            (Strings{"Gorom-Gorom"}));
  EXPECT_EQ(Canonicals(Recognize({{"Boucle-du-Mouhoun", 0, 17}}, index, {})),
            (Strings{"Boucle du Mouhoun"}));
}

TEST(Recognize, AliasReportsCanonical) {
  const FuzzyIndex index(Est());
  EXPECT_EQ(Canonicals(Recognize({{"GOROM", 0, 5}}, index, {})),
            (Strings{"Gorom-Gorom"}));
}

TEST(Recognize, Stopwords) {
  const Gazetteer g = MakeGazetteer("Les\tvillage\t\t\nDans\tvillage\t\t\n");
  const FuzzyIndex index(g);
  EXPECT_TRUE(Recognize({{"Les", 0, 3}, {"dans", 4, 8}}, index, {}).empty());
  PipelineConfig config;
  config.stopwords.clear();
  EXPECT_EQ(Recognize({{"Les", 0, 3}, {"dans", 4, 8}}, index, config).size(), 2u);
}

TEST(Recognize, FuzzyMatchWithinThreshold) {
  const FuzzyIndex index(Est());
  const auto matches = Recognize({{"Tanwalbougu", 0, 11}}, index, {});
  ASSERT_EQ(matches.size(), 1u);
  EXPECT_FALSE(matches[0].exact);
  EXPECT_EQ(matches[0].distance, MakeNormalized(1, 11, 12));
  EXPECT_TRUE(Recognize({{"Tanwxxbougu", 0, 11}}, index, {}).size() == 1);
  EXPECT_TRUE(Recognize({{"Txnwxxbxugu", 0, 11}}, index, {}).empty());
}

TEST(PipelineConfig, Validate) {
  PipelineConfig config;
  EXPECT_NO_THROW(config.Validate());
  config.threshold = 0.0;
  EXPECT_ANY_THROW(config.Validate());
  config.threshold = 1.5;
  EXPECT_ANY_THROW(config.Validate());
  config.threshold = 1.0;
  config.min_fuzzy_len = 0;
  EXPECT_ANY_THROW(config.Validate());
}

std::vector<Token> RandomTokens(std::mt19937_64& rng, const Gazetteer& g) {
  std::vector<std::string> names;
  for (const auto& ref : g.names()) names.push_back(ref.key);
  for (size_t i = 0; i < 3 && names.size() >= 2; ++i) {
    names.push_back(names[rng() % names.size()] + "-" + names[rng() % names.size()]);
  }
  const std::string text = testing::RandomText(rng, names);
  return Tokenize(Preprocess(text, g).text);
}

bool SameMatch(const LocationMatch& a, const LocationMatch& b) {
  return a.token == b.token && a.entry == b.entry && a.distance == b.distance;
}

TEST(Recognize, PropertyThresholdMonotone) {
  std::mt19937_64 rng(51);
  for (int i = 0; i < 300; ++i) {
    const Gazetteer g = testing::RandomGazetteer(rng, 80, U"abcdeo", 3, 10);
    const FuzzyIndex index(g);
    const auto tokens = RandomTokens(rng, g);
    PipelineConfig low;
    low.threshold = 0.05 + 0.4 * static_cast<double>(rng() % 1000) / 1000.0;
    PipelineConfig high = low;
    high.threshold = low.threshold + (1.0 - low.threshold) *
                                         static_cast<double>(rng() % 1000) / 1000.0;
    const auto a = Recognize(tokens, index, low);
    const auto b = Recognize(tokens, index, high);
    for (const LocationMatch& m : a) {
      bool kept = false;
      for (const LocationMatch& n : b) {
        kept = kept || SameMatch(m, n) ||
               // A looser threshold may match the whole hyphenated token,
               // which then supersedes its parts.
               (n.token.start <= m.token.start && m.token.end <= n.token.end &&
                n.token.text.find('-') != std::string::npos);
      }
      ASSERT_TRUE(kept) << m.token.text << " " << low.threshold << " -> "
                        << high.threshold;
    }
  }
}

TEST(Recognize, PropertyScanEqualsIndexedAndCanonical) {
  std::mt19937_64 rng(52);
  for (int i = 0; i < 300; ++i) {
    const Gazetteer g = testing::RandomGazetteer(rng, 120, U"abcdeo", 2, 10);
    const FuzzyIndex index(g);
    const auto tokens = RandomTokens(rng, g);
    PipelineConfig config;
    config.threshold = 0.1 + 0.9 * static_cast<double>(rng() % 1000) / 1000.0;
    const auto indexed = Recognize(tokens, index, config, SearchMode::kIndexed);
    const auto scanned = Recognize(tokens, index, config, SearchMode::kScan);
    ASSERT_EQ(indexed.size(), scanned.size());
    for (size_t k = 0; k < indexed.size(); ++k) {
      ASSERT_TRUE(SameMatch(indexed[k], scanned[k]));
      const LocationMatch& m = indexed[k];
      ASSERT_EQ(m.canonical, g.entries()[m.entry].canonical);
      ASSERT_TRUE(m.distance.WithinCutoff(config.threshold));
      ASSERT_EQ(m.exact, m.distance.edits() == 0);
      if (k > 0) ASSERT_LE(indexed[k - 1].token.end, m.token.start);
    }
    ASSERT_EQ(Recognize(tokens, index, config).size(), indexed.size());
  }
}

}  // namespace
}  // namespace locxtract
