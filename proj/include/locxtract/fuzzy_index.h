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

#ifndef LOCXTRACT_FUZZY_INDEX_H_
#define LOCXTRACT_FUZZY_INDEX_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "locxtract/edit_distance.h"
#include "locxtract/gazetteer.h"

namespace locxtract {

// Code-point histogram over 32 buckets. Any two strings satisfy
// BagLowerBound(a, b) <= Levenshtein(a, b).
using Histogram = std::array<uint8_t, 32>;
Histogram MakeHistogram(std::u32string_view s);
int BagLowerBound(const Histogram& a, size_t length_a, const Histogram& b,
                  size_t length_b);

// The form names are compared in: the normalized key with spaces turned
// into hyphens, which is how hyphenated multiword names reach the matcher.
std::u32string MatchForm(std::string_view normalized_key);

// Gazetteer names (keys and aliases, in gazetteer order) prepared for
// matching. Owns copies of what it needs, so it does not borrow the
// gazetteer it was built from.
class NameTable {
 public:
  explicit NameTable(const Gazetteer& gazetteer);

  size_t size() const { return forms_.size(); }
  const std::u32string& form(size_t name) const { return forms_[name]; }
  const Histogram& histogram(size_t name) const { return histograms_[name]; }
  size_t entry(size_t name) const { return entries_[name]; }
  const std::string& canonical(size_t name) const {
    return canonicals_[entries_[name]];
  }
  size_t max_length() const { return max_length_; }

  // First name (in gazetteer order) whose form equals `word` exactly.
  std::optional<size_t> FindExact(std::u32string_view word) const;

 private:
  std::vector<std::u32string> forms_;
  std::vector<Histogram> histograms_;
  std::vector<size_t> entries_;
  std::vector<std::string> canonicals_;
  std::unordered_map<std::u32string, size_t> exact_;
  size_t max_length_ = 0;
};

struct NameMatch {
  size_t name = 0;  // index into the NameTable
  NormalizedDistance distance;

  friend bool operator==(const NameMatch&, const NameMatch&) = default;
};

// Tie-break chain shared by every search: smaller distance (so exact
// matches first), then longer name, then earlier gazetteer position.
bool Precedes(const NameMatch& a, const NameMatch& b, const NameTable& names);

// Closest name found so far during a scan and its distance. `min` starts
// at the maximal distance 1 and never increases.
struct MatchState {
  std::optional<size_t> current;
  NormalizedDistance min = NormalizedDistance::Max();

  // Takes the candidate if it precedes the current best.
  void Offer(const NameMatch& candidate, const NameTable& names);
};

// Reference matcher: reads every name in gazetteer order and keeps the
// closest. Empty only for an empty table. When `trace` is given it
// receives `min` after each name read.
std::optional<NameMatch> BestMatchScan(
    std::u32string_view word, const NameTable& names,
    std::vector<NormalizedDistance>* trace = nullptr);

// BK-trees over raw Levenshtein distance, one per name length, answering
// the same question as BestMatchScan restricted to names within a
// normalized cutoff. The per-length radius comes from
// 2L / (m + n + L) <= cutoff, so no admissible name is ever pruned.
//
// Each child slot of a node is labeled with a distance d and holds only
// names at distance exactly d from the node's name: either a small bucket
// of names or, once the bucket overflows, a subtree. A histogram lower
// bound skips work the triangle inequality would discard anyway.
class FuzzyIndex {
 public:
  static constexpr size_t kBucketSize = 24;

  explicit FuzzyIndex(const Gazetteer& gazetteer);

  const NameTable& names() const { return names_; }

  // Same result as BestMatchScan whenever that result is within `cutoff`;
  // nothing otherwise. `cutoff` must be in (0, 1].
  std::optional<NameMatch> BestMatch(std::u32string_view word,
                                     double cutoff) const;

  struct Stats {
    size_t names = 0;  // names stored, nodes and bucket members together
    size_t nodes = 0;
    size_t trees = 0;
    size_t max_depth = 0;
  };
  Stats stats() const;

  // Calls visit(parent_name, edge, name) for every name stored anywhere
  // below the slot `edge` of the node holding `parent_name`.
  template <typename Visit>
  void ForEachEdge(Visit&& visit) const {
    for (const auto& [length, tree] : trees_) {
      for (const Node& node : tree) {
        for (const Slot& slot : node.slots) {
          for (uint32_t name : SlotNames(tree, slot)) {
            visit(node.name, slot.edge, name);
          }
        }
      }
    }
  }

  // Every name stored in the trees, in no particular order.
  std::vector<size_t> StoredNames() const;

 private:
  static constexpr uint32_t kNoNode = UINT32_MAX;

  struct Slot {
    int edge = 0;
    uint32_t child = kNoNode;  // subtree root, or kNoNode while bucketed
    std::vector<uint32_t> bucket;
  };
  struct Node {
    uint32_t name = 0;
    int max_edge = 0;
    std::vector<Slot> slots;
  };
  using Tree = std::vector<Node>;

  void Insert(Tree& tree, uint32_t at, uint32_t name);
  static std::vector<uint32_t> SlotNames(const Tree& tree, const Slot& slot);

  NameTable names_;
  std::map<size_t, Tree> trees_;  // keyed by name length
};

}  // namespace locxtract

#endif  // LOCXTRACT_FUZZY_INDEX_H_
