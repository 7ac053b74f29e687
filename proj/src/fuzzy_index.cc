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

#include <algorithm>
#include <cstdlib>

#include "locxtract/unicode.h"

namespace locxtract {

namespace {

size_t Bucket(char32_t c) {
  if (c >= U'a' && c <= U'z') return c - U'a';
  if (c >= U'A' && c <= U'Z') return c - U'A';
  if (c >= U'0' && c <= U'9') return 26;
  if (c == U'-') return 27;
  if (c == U'_') return 28;
  if (c < 128) return 29;
  return 30 + (c & 1);
}

}  // namespace

Histogram MakeHistogram(std::u32string_view s) {
  Histogram h{};
  for (char32_t c : s) {
    uint8_t& count = h[Bucket(c)];
    if (count < 255) ++count;
  }
  return h;
}

int BagLowerBound(const Histogram& a, size_t length_a, const Histogram& b,
                  size_t length_b) {
  // Characters of a with no counterpart in b; saturated buckets only ever
  // make this smaller, so it stays a lower bound.
  int surplus = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    surplus += a[i] > b[i] ? a[i] - b[i] : 0;
  }
  // The surplus of b over a differs by the length difference.
  const int other = surplus + static_cast<int>(length_b) -
                    static_cast<int>(length_a);
  return std::max(surplus, other);
}

std::u32string MatchForm(std::string_view normalized_key) {
  std::u32string form = ToUtf32(normalized_key);
  std::replace(form.begin(), form.end(), U' ', U'-');
  return form;
}

NameTable::NameTable(const Gazetteer& gazetteer) {
  for (const GazetteerEntry& entry : gazetteer.entries()) {
    canonicals_.push_back(entry.canonical);
  }
  for (const NameRef& ref : gazetteer.names()) {
    forms_.push_back(MatchForm(ref.key));
    histograms_.push_back(MakeHistogram(forms_.back()));
    entries_.push_back(ref.entry);
    exact_.emplace(forms_.back(), forms_.size() - 1);
    max_length_ = std::max(max_length_, forms_.back().size());
  }
}

std::optional<size_t> NameTable::FindExact(std::u32string_view word) const {
  auto it = exact_.find(std::u32string(word));
  if (it == exact_.end()) return std::nullopt;
  return it->second;
}

bool Precedes(const NameMatch& a, const NameMatch& b, const NameTable& names) {
  if (a.distance != b.distance) return a.distance < b.distance;
  const size_t length_a = names.form(a.name).size();
  const size_t length_b = names.form(b.name).size();
  if (length_a != length_b) return length_a > length_b;
  return a.name < b.name;
}

void MatchState::Offer(const NameMatch& candidate, const NameTable& names) {
  if (current && !Precedes(candidate, {*current, min}, names)) return;
  current = candidate.name;
  min = candidate.distance;
}

std::optional<NameMatch> BestMatchScan(
    std::u32string_view word, const NameTable& names,
    std::vector<NormalizedDistance>* trace) {
  const LevenshteinPattern pattern{std::u32string(word)};
  const size_t m = word.size();
  MatchState state;
  for (size_t name = 0; name < names.size(); ++name) {
    const std::u32string& dic_word = names.form(name);
    const size_t n = dic_word.size();
    // The length difference bounds the distance from below; a name that
    // cannot reach `min` even in the best case is not worth the DP.
    const int lower = static_cast<int>(m > n ? m - n : n - m);
    if (!state.current || MakeNormalized(lower, m, n) <= state.min) {
      const NormalizedDistance d =
          MakeNormalized(pattern.Distance(dic_word), m, n);
      state.Offer({name, d}, names);
    }
    if (trace) trace->push_back(state.min);
  }
  if (!state.current) return std::nullopt;
  return NameMatch{*state.current, state.min};
}

FuzzyIndex::FuzzyIndex(const Gazetteer& gazetteer) : names_(gazetteer) {
  for (size_t name = 0; name < names_.size(); ++name) {
    Tree& tree = trees_[names_.form(name).size()];
    if (tree.empty()) {
      tree.push_back({static_cast<uint32_t>(name), 0, {}});
    } else {
      Insert(tree, 0, static_cast<uint32_t>(name));
    }
  }
}

void FuzzyIndex::Insert(Tree& tree, uint32_t at, uint32_t name) {
  const std::u32string& form = names_.form(name);
  while (true) {
    const int d = Levenshtein(names_.form(tree[at].name), form);
    tree[at].max_edge = std::max(tree[at].max_edge, d);
    auto& slots = tree[at].slots;
    auto it = std::find_if(slots.begin(), slots.end(),
                           [d](const Slot& slot) { return slot.edge == d; });
    if (it == slots.end()) {
      slots.push_back({d, kNoNode, {name}});
      return;
    }
    if (it->child != kNoNode) {
      at = it->child;
      continue;
    }
    it->bucket.push_back(name);
    if (it->bucket.size() <= kBucketSize) return;
    // Overflow: the oldest member becomes a node, the rest go below it.
    std::vector<uint32_t> members = std::move(it->bucket);
    it->bucket.clear();
    const auto child = static_cast<uint32_t>(tree.size());
    it->child = child;
    tree.push_back({members.front(), 0, {}});
    for (size_t i = 1; i < members.size(); ++i) Insert(tree, child, members[i]);
    return;
  }
}

std::vector<uint32_t> FuzzyIndex::SlotNames(const Tree& tree,
                                            const Slot& slot) {
  std::vector<uint32_t> out = slot.bucket;
  if (slot.child == kNoNode) return out;
  std::vector<uint32_t> stack = {slot.child};
  while (!stack.empty()) {
    const Node& node = tree[stack.back()];
    stack.pop_back();
    out.push_back(node.name);
    for (const Slot& child_slot : node.slots) {
      out.insert(out.end(), child_slot.bucket.begin(), child_slot.bucket.end());
      if (child_slot.child != kNoNode) stack.push_back(child_slot.child);
    }
  }
  return out;
}

std::optional<NameMatch> FuzzyIndex::BestMatch(std::u32string_view word,
                                               double cutoff) const {
  if (auto exact = names_.FindExact(word)) {
    return NameMatch{*exact, MakeNormalized(0, word.size(), word.size())};
  }
  const LevenshteinPattern pattern{std::u32string(word)};
  const size_t m = word.size();
  const Histogram histogram = MakeHistogram(word);
  std::optional<NameMatch> best;
  int radius = 0;
  size_t n = 0;

  // Names of the current length beyond `best` cannot win; ties still can.
  auto shrink = [&] {
    while (radius > 0 && MakeNormalized(radius, m, n) > best->distance) {
      --radius;
    }
  };
  auto consider = [&](uint32_t name, int d) {
    if (d > radius) return;
    const NameMatch candidate{name, MakeNormalized(d, m, n)};
    if (!best || Precedes(candidate, *best, names_)) {
      best = candidate;
      shrink();
    }
  };

  std::vector<uint32_t> stack;
  for (const auto& [length, tree] : trees_) {
    n = length;
    radius = MaxEditsWithin(cutoff, m, n);
    if (static_cast<size_t>(radius) < (m > n ? m - n : n - m)) continue;
    if (best) shrink();
    stack.assign(1, 0);
    while (!stack.empty()) {
      const Node& node = tree[stack.back()];
      stack.pop_back();
      // d >= bound, and every slot needs an edge >= d - radius.
      const int bound =
          BagLowerBound(histogram, m, names_.histogram(node.name), n);
      if (bound > radius + node.max_edge) continue;
      const int d = pattern.Distance(names_.form(node.name));
      consider(node.name, d);
      for (const Slot& slot : node.slots) {
        if (std::abs(slot.edge - d) > radius) continue;
        if (slot.child != kNoNode) {
          stack.push_back(slot.child);
          continue;
        }
        for (uint32_t name : slot.bucket) {
          // `radius` shrinks as better names turn up.
          if (std::abs(slot.edge - d) > radius) break;
          if (BagLowerBound(histogram, m, names_.histogram(name), n) > radius) {
            continue;
          }
          consider(name, pattern.Distance(names_.form(name)));
        }
      }
    }
  }
  if (best && !best->distance.WithinCutoff(cutoff)) return std::nullopt;
  return best;
}

FuzzyIndex::Stats FuzzyIndex::stats() const {
  Stats stats;
  stats.trees = trees_.size();
  for (const auto& [length, tree] : trees_) {
    stats.nodes += tree.size();
    std::vector<std::pair<uint32_t, size_t>> stack = {{0, 1}};
    while (!stack.empty()) {
      auto [at, depth] = stack.back();
      stack.pop_back();
      stats.max_depth = std::max(stats.max_depth, depth);
      ++stats.names;
      for (const Slot& slot : tree[at].slots) {
        stats.names += slot.bucket.size();
        if (!slot.bucket.empty()) {
          stats.max_depth = std::max(stats.max_depth, depth + 1);
        }
        if (slot.child != kNoNode) stack.emplace_back(slot.child, depth + 1);
      }
    }
  }
  return stats;
}

std::vector<size_t> FuzzyIndex::StoredNames() const {
  std::vector<size_t> out;
  for (const auto& [length, tree] : trees_) {
    for (const Node& node : tree) {
      out.push_back(node.name);
      for (const Slot& slot : node.slots) {
        out.insert(out.end(), slot.bucket.begin(), slot.bucket.end());
      }
    }
  }
  return out;
}

}  // namespace locxtract
