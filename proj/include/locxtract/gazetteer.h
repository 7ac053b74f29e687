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

#ifndef LOCXTRACT_GAZETTEER_H_
#define LOCXTRACT_GAZETTEER_H_

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace locxtract {

enum class Level { kRegion, kProvince, kCommune, kVillage, kUnknown };

std::string_view LevelName(Level level);
// Accepts the lowercase level names; the empty string maps to kUnknown.
std::optional<Level> ParseLevel(std::string_view text);

struct GazetteerEntry {
  std::string canonical;
  std::string key;
  Level level = Level::kUnknown;
  std::optional<std::string> parent;
  std::vector<std::string> aliases;
  std::vector<std::string> alias_keys;  // parallel to aliases
};

// One matchable name: an entry key or one of its alias keys.
struct NameRef {
  std::string key;
  size_t entry = 0;  // index into Gazetteer::entries()
  bool alias = false;
};

enum class LoadError { kDuplicateKey, kBadLevel, kMalformedLine };

std::string_view LoadErrorName(LoadError error);

struct LoadIssue {
  size_t line = 0;  // 1-based; 0 when not tied to an input line
  LoadError error = LoadError::kMalformedLine;
  std::string message;
};

class Gazetteer;

// Accumulates entries in order and enforces key uniqueness across
// canonicals and aliases.
class GazetteerBuilder {
 public:
  // Adds an entry. On failure nothing is added and the issue is returned.
  std::optional<LoadIssue> Add(std::string_view canonical, Level level,
                               std::optional<std::string> parent = {},
                               const std::vector<std::string>& aliases = {},
                               size_t line = 0);

  Gazetteer Build() &&;

 private:
  std::vector<GazetteerEntry> entries_;
  std::unordered_map<std::string, size_t> index_;
};

// The database of known location names. Immutable once built, so one
// instance can be shared by any number of concurrent readers.
class Gazetteer {
 public:
  Gazetteer() = default;

  const std::vector<GazetteerEntry>& entries() const { return entries_; }
  size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  // Every entry key and alias key, in file order, each entry followed by
  // its aliases.
  const std::vector<NameRef>& names() const { return names_; }

  // Entries whose canonical has two or more words, most words first, file
  // order among equals.
  const std::vector<size_t>& multiword() const { return multiword_; }

  // All multiword names, aliases included, in the same order as multiword().
  const std::vector<NameRef>& multiword_names() const {
    return multiword_names_;
  }

  // Lookup by normalized key; aliases resolve to their entry.
  const GazetteerEntry* Find(std::string_view key) const;

  // Entries whose parent names no entry of the gazetteer.
  std::vector<size_t> UnresolvedParents() const;

 private:
  friend class GazetteerBuilder;

  std::vector<GazetteerEntry> entries_;
  std::unordered_map<std::string, size_t> index_;
  std::vector<NameRef> names_;
  std::vector<size_t> multiword_;
  std::vector<NameRef> multiword_names_;
};

struct LoadResult {
  Gazetteer gazetteer;
  std::vector<LoadIssue> issues;  // one per rejected line

  bool ok() const { return issues.empty(); }
};

// Reads the tab-separated gazetteer format:
//   canonical<TAB>level<TAB>parent<TAB>aliases
// with `;`-separated aliases, `#` comment lines and blank lines skipped.
// Rejected lines are reported and skipped; the rest still load.
LoadResult LoadGazetteer(std::istream& in);
LoadResult LoadGazetteerFromString(std::string_view text);
// Throws std::runtime_error if the file cannot be opened.
LoadResult LoadGazetteerFile(const std::string& path);

// Serializes back to the TSV format.
std::string ToTsv(const Gazetteer& gazetteer);

size_t WordCount(std::string_view normalized);

}  // namespace locxtract

#endif  // LOCXTRACT_GAZETTEER_H_
