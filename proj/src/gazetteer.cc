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

#include <algorithm>
#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "locxtract/unicode.h"

namespace locxtract {

namespace {

std::string_view TrimAscii(std::string_view s) {
  const auto is_space = [](char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' ||
           c == '\v';
  };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> Split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  size_t start = 0;
  while (true) {
    const size_t pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      parts.push_back(s.substr(start));
      return parts;
    }
    parts.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

}  // namespace

std::string_view LevelName(Level level) {
  switch (level) {
    case Level::kRegion:
      return "region";
    case Level::kProvince:
      return "province";
    case Level::kCommune:
      return "commune";
    case Level::kVillage:
      return "village";
    case Level::kUnknown:
      return "unknown";
  }
  return "unknown";
}

std::optional<Level> ParseLevel(std::string_view text) {
  if (text.empty() || text == "unknown") return Level::kUnknown;
  if (text == "region") return Level::kRegion;
  if (text == "province") return Level::kProvince;
  if (text == "commune") return Level::kCommune;
  if (text == "village") return Level::kVillage;
  return std::nullopt;
}

std::string_view LoadErrorName(LoadError error) {
  switch (error) {
    case LoadError::kDuplicateKey:
      return "DuplicateKey";
    case LoadError::kBadLevel:
      return "BadLevel";
    case LoadError::kMalformedLine:
      return "MalformedLine";
  }
  return "MalformedLine";
}

size_t WordCount(std::string_view normalized) {
  if (normalized.empty()) return 0;
  return static_cast<size_t>(
             std::count(normalized.begin(), normalized.end(), ' ')) +
         1;
}

std::optional<LoadIssue> GazetteerBuilder::Add(
    std::string_view canonical, Level level, std::optional<std::string> parent,
    const std::vector<std::string>& aliases, size_t line) {
  GazetteerEntry entry;
  entry.canonical = std::string(TrimAscii(canonical));
  entry.key = NormalizeName(entry.canonical);
  if (entry.key.empty()) {
    return LoadIssue{line, LoadError::kMalformedLine, "empty canonical name"};
  }
  entry.level = level;
  if (parent && !TrimAscii(*parent).empty()) {
    entry.parent = std::string(TrimAscii(*parent));
  }

  auto collision = [&](const std::string& key) -> std::optional<LoadIssue> {
    auto it = index_.find(key);
    if (it == index_.end()) return std::nullopt;
    return LoadIssue{line, LoadError::kDuplicateKey,
                     "key '" + key + "' already used by '" +
                         entries_[it->second].canonical + "'"};
  };
  if (auto issue = collision(entry.key)) return issue;

  std::unordered_set<std::string> seen = {entry.key};
  for (const std::string& raw : aliases) {
    std::string alias(TrimAscii(raw));
    std::string alias_key = NormalizeName(alias);
    if (alias_key.empty() || !seen.insert(alias_key).second) continue;
    if (auto issue = collision(alias_key)) return issue;
    entry.aliases.push_back(std::move(alias));
    entry.alias_keys.push_back(std::move(alias_key));
  }

  const size_t id = entries_.size();
  index_.emplace(entry.key, id);
  for (const std::string& alias_key : entry.alias_keys) {
    index_.emplace(alias_key, id);
  }
  entries_.push_back(std::move(entry));
  return std::nullopt;
}

Gazetteer GazetteerBuilder::Build() && {
  Gazetteer g;
  g.entries_ = std::move(entries_);
  g.index_ = std::move(index_);
  for (size_t i = 0; i < g.entries_.size(); ++i) {
    const GazetteerEntry& e = g.entries_[i];
    g.names_.push_back({e.key, i, false});
    for (const std::string& alias_key : e.alias_keys) {
      g.names_.push_back({alias_key, i, true});
    }
    if (WordCount(e.key) >= 2) g.multiword_.push_back(i);
  }
  std::stable_sort(g.multiword_.begin(), g.multiword_.end(),
                   [&](size_t a, size_t b) {
                     return WordCount(g.entries_[a].key) >
                            WordCount(g.entries_[b].key);
                   });
  for (const NameRef& name : g.names_) {
    if (WordCount(name.key) >= 2) g.multiword_names_.push_back(name);
  }
  std::stable_sort(g.multiword_names_.begin(), g.multiword_names_.end(),
                   [](const NameRef& a, const NameRef& b) {
                     return WordCount(a.key) > WordCount(b.key);
                   });
  return g;
}

const GazetteerEntry* Gazetteer::Find(std::string_view key) const {
  auto it = index_.find(std::string(key));
  return it == index_.end() ? nullptr : &entries_[it->second];
}

std::vector<size_t> Gazetteer::UnresolvedParents() const {
  std::vector<size_t> out;
  for (size_t i = 0; i < entries_.size(); ++i) {
    const auto& parent = entries_[i].parent;
    if (parent && Find(NormalizeName(*parent)) == nullptr) out.push_back(i);
  }
  return out;
}

LoadResult LoadGazetteer(std::istream& in) {
  GazetteerBuilder builder;
  std::vector<LoadIssue> issues;
  std::string line;
  size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (TrimAscii(line).empty() || line.front() == '#') continue;
    if (!IsValidUtf8(line)) {
      issues.push_back({line_number, LoadError::kMalformedLine,
                        "line is not valid UTF-8"});
      continue;
    }
    const std::vector<std::string_view> columns = Split(line, '\t');
    if (columns.size() != 4) {
      issues.push_back({line_number, LoadError::kMalformedLine,
                        "expected 4 tab-separated columns, found " +
                            std::to_string(columns.size())});
      continue;
    }
    const std::string_view level_text = TrimAscii(columns[1]);
    const std::optional<Level> level = ParseLevel(level_text);
    if (!level) {
      issues.push_back({line_number, LoadError::kBadLevel,
                        "unrecognized level '" + std::string(level_text) +
                            "'"});
      continue;
    }
    std::vector<std::string> aliases;
    if (!TrimAscii(columns[3]).empty()) {
      for (std::string_view alias : Split(columns[3], ';')) {
        aliases.emplace_back(alias);
      }
    }
    if (auto issue = builder.Add(columns[0], *level, std::string(columns[2]),
                                 aliases, line_number)) {
      issues.push_back(std::move(*issue));
    }
  }
  return {std::move(builder).Build(), std::move(issues)};
}

LoadResult LoadGazetteerFromString(std::string_view text) {
  std::istringstream in{std::string(text)};
  return LoadGazetteer(in);
}

LoadResult LoadGazetteerFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open gazetteer file: " + path);
  return LoadGazetteer(in);
}

std::string ToTsv(const Gazetteer& gazetteer) {
  std::string out;
  for (const GazetteerEntry& e : gazetteer.entries()) {
    out += e.canonical;
    out += '\t';
    out += LevelName(e.level);
    out += '\t';
    out += e.parent.value_or("");
    out += '\t';
    for (size_t i = 0; i < e.aliases.size(); ++i) {
      if (i > 0) out += ';';
      out += e.aliases[i];
    }
    out += '\n';
  }
  return out;
}

}  // namespace locxtract
