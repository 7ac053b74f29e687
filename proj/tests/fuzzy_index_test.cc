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

#include "locxtract/fuzzy_index.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <random>
#include <string>

#include "generators.h"
#include "locxtract/edit_distance.h"
#include "locxtract/gazetteer.h"
#include "locxtract/unicode.h"
#include "oracles.h"

namespace locxtract {
namespace {

Gazetteer MakeGazetteer(std::string_view tsv) {
  LoadResult r = LoadGazetteerFromString(tsv);
  EXPECT_TRUE(r.ok());
  return std::move(r.gazetteer);
}

// Reference best match computed directly from the tie-break chain:
// smallest distance, then longest form, then earliest name.
std::optional<NameMatch> BruteForce(const std::u32string& word,
                                    const NameTable& names) {
  std::optional<NameMatch> best;
  for (size_t i = 0; i < names.size(); ++i) {
    const auto& form = names.form(i);
    const int l = testing::OracleLevenshtein(word, form);
    const NameMatch m{i, MakeNormalized(l, word.size(), form.size())};
    if (!best || m.distance < best->distance ||
        (m.distance == best->distance &&
         form.size() > names.form(best->name).size())) {
      best = m;
    }
  }
  return best;
}

TEST(BestMatchScan, Examples) {
  const Gazetteer g = MakeGazetteer("Gourma\tprovince\t\t\nGorom\tcommune\t\t\n");
  const NameTable names(g);
  auto m = BestMatchScan(U"gorom", names);
  ASSERT_TRUE(m);
  EXPECT_EQ(names.canonical(m->name), "Gorom");
  EXPECT_EQ(m->distance.value(), 0.0);

  m = BestMatchScan(U"gorum", names);
  ASSERT_TRUE(m);
  EXPECT_EQ(names.canonical(m->name), "Gorom");
  // gorum/gorom: one substitution; gorum/gourma: two edits (oracle).
  const int l1 = testing::OracleLevenshtein(U"gorum", U"gorom");
  const int l2 = testing::OracleLevenshtein(U"gorum", U"gourma");
  EXPECT_EQ(l1, 1);
  EXPECT_DOUBLE_EQ(m->distance.value(), 2.0 * l1 / (5 + 5 + l1));
  EXPECT_NEAR(m->distance.value(), 0.1818, 1e-4);
  EXPECT_GT(2.0 * l2 / (5 + 6 + l2), m->distance.value());

  EXPECT_FALSE(BestMatchScan(U"gorom", NameTable(Gazetteer())));
}

TEST(BestMatchScan, TieBreaks) {
  // "abcd" is one edit from both "abc" (2/8) and "abcde" (2/10); the
  // smaller normalized distance wins even though "abc" comes first.
  const Gazetteer g = MakeGazetteer("abc\tunknown\t\t\nabcde\tunknown\t\t\n");
  const NameTable names(g);
  EXPECT_EQ(names.canonical(BestMatchScan(U"abcd", names)->name), "abcde");

  // Equal distance and length: file order.
  const Gazetteer h = MakeGazetteer("abcx\tunknown\t\t\nabcy\tunknown\t\t\n");
  const NameTable hn(h);
  EXPECT_EQ(hn.canonical(BestMatchScan(U"abcz", hn)->name), "abcx");

  // Equal distance, different lengths: the longer name. "ab" is 2/4 from
  // "a" and 4/8 from "abcd".
  const Gazetteer m = MakeGazetteer("a\tunknown\t\t\nabcd\tunknown\t\t\n");
  const NameTable mn(m);
  EXPECT_EQ(mn.canonical(BestMatchScan(U"ab", mn)->name), "abcd");

  // Equal distance and length again: "goroma" is one deletion from both.
  const Gazetteer k = MakeGazetteer("gorma\tunknown\t\t\ngorom\tunknown\t\t\n");
  const NameTable kn(k);
  EXPECT_EQ(kn.canonical(BestMatchScan(U"goroma", kn)->name), "gorma");
}

TEST(BestMatchScan, PropertyMonotoneTrace) {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 300; ++i) {
    const Gazetteer g = testing::RandomGazetteer(rng, 60, U"abcdé", 2, 8);
    const NameTable names(g);
    const auto query = testing::RandomQuery(rng, g, U"abcdé", 3);
    std::vector<NormalizedDistance> trace;
    const auto best = BestMatchScan(query, names, &trace);
    ASSERT_EQ(trace.size(), names.size());
    for (size_t k = 1; k < trace.size(); ++k) ASSERT_LE(trace[k], trace[k - 1]);
    if (best) ASSERT_EQ(trace.back(), best->distance);
    ASSERT_EQ(best, BruteForce(query, names));
  }
}

TEST(FuzzyIndex, ExamplesAndCutoff) {
  const Gazetteer g = MakeGazetteer("Gourma\tprovince\t\t\nGorom\tcommune\t\t\n");
  const FuzzyIndex index(g);
  auto m = index.BestMatch(U"gorum", 0.25);
  ASSERT_TRUE(m);
  EXPECT_EQ(index.names().canonical(m->name), "Gorom");
  EXPECT_FALSE(index.BestMatch(U"zzzzzz", 0.25));
  EXPECT_FALSE(index.BestMatch(U"gorum", 0.1));
  EXPECT_FALSE(FuzzyIndex(Gazetteer()).BestMatch(U"gorom", 1.0));
}

TEST(FuzzyIndex, PropertyAgreesWithScan) {
  std::mt19937_64 rng(42);
  for (int i = 0; i < 300; ++i) {
    const size_t size = 1 + rng() % 400;
    const Gazetteer g = testing::RandomGazetteer(rng, size, U"abcdeè", 1, 10);
    const FuzzyIndex index(g);
    for (int q = 0; q < 10; ++q) {
      const auto query = testing::RandomQuery(rng, g, U"abcdeè", 3);
      for (double cutoff : {0.1, 0.25, 0.5, 1.0}) {
        std::optional<NameMatch> expected = BestMatchScan(query, index.names());
        if (expected && !expected->distance.WithinCutoff(cutoff)) expected.reset();
        ASSERT_EQ(index.BestMatch(query, cutoff), expected)
            << ToUtf8(query) << " cutoff " << cutoff << " size " << size;
      }
    }
  }
}

TEST(FuzzyIndex, PropertyStructure) {
  std::mt19937_64 rng(43);
  for (int i = 0; i < 200; ++i) {
    const Gazetteer g = testing::RandomGazetteer(rng, 1 + rng() % 300, U"abcd", 1, 9);
    const FuzzyIndex index(g);
    const NameTable& names = index.names();
    ASSERT_EQ(names.size(), g.names().size());

    // Every name is stored exactly once.
    std::vector<size_t> stored = index.StoredNames();
    std::sort(stored.begin(), stored.end());
    std::vector<size_t> all(names.size());
    for (size_t k = 0; k < all.size(); ++k) all[k] = k;
    ASSERT_EQ(stored, all);
    ASSERT_EQ(index.stats().names, names.size());

    // Everything under an edge labelled d is at distance d from the parent.
    size_t edges = 0;
    index.ForEachEdge([&](size_t parent, int edge, size_t name) {
      ++edges;
      ASSERT_EQ(Levenshtein(names.form(parent), names.form(name)), edge);
      ASSERT_EQ(names.form(parent).size(), names.form(name).size());
    });
    ASSERT_LE(edges, names.size() * names.size());
  }
}

TEST(BagLowerBound, NeverExceedsDistance) {
  std::mt19937_64 rng(44);
  for (int i = 0; i < 5000; ++i) {
    const auto a = testing::RandomString(rng, U"az09-_.éœ", 12);
    const auto b = testing::RandomString(rng, U"az09-_.éœ", 12);
    ASSERT_LE(BagLowerBound(MakeHistogram(a), a.size(), MakeHistogram(b), b.size()),
              Levenshtein(a, b));
  }
}

}  // namespace
}  // namespace locxtract
