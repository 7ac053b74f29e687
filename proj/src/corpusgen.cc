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

#include "locxtract/corpusgen.h"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "locxtract/edit_distance.h"
#include "locxtract/tokenizer.h"
#include "locxtract/unicode.h"

namespace locxtract {

namespace {

const std::vector<std::string_view> kOneSlot = {
    "Des individus armés ont attaqué le village de {} dans la nuit.",
    "Des terroristes ont été signalés à {} ce matin.",
    "Attaque meurtrière dans la localité de {} hier soir.",
    "Le marché de {} a été incendié par des hommes armés.",
    "Les populations de {} ont quitté leurs domiciles.",
    "Une patrouille militaire est tombée dans une embuscade à {}.",
};

const std::vector<std::string_view> kTwoSlot = {
    "Un camion allant de {} à {} a été arrêté par des hommes armés.",
    "Les habitants de {} ont fui vers {} après l'attaque.",
    "Des individus armés ont attaqué {} près de {}.",
    "Les forces de défense ont repoussé une attaque entre {} et {}.",
};

// Only used when both names are single words.
constexpr std::string_view kRoute =
    "Une embuscade a eu lieu sur l'axe {}-{} hier.";

const std::vector<std::string_view> kFiller = {
    "La situation reste tendue dans la zone.",
    "Les populations sont appelées à la vigilance.",
    "Aucun bilan officiel n'a encore été communiqué.",
    "Selon des sources locales, les assaillants étaient nombreux.",
    "Le chauffeur a pu s'échapper et donner l'alerte.",
    "Les forces de sécurité ont ratissé la zone.",
    "Plusieurs motos ont été emportées par les assaillants.",
    "Des renforts sont arrivés dans la matinée.",
};

const std::vector<std::string_view> kHandles = {
    "InfoSahel", "LeFasoNet", "Burkina24", "AIB_Burkina", "Wakat_Sera",
};

// A rendered text as pieces, so noise can target location or filler words.
struct Piece {
  std::string text;
  bool location = false;
};

void AppendTemplate(std::string_view pattern,
                    const std::vector<std::string>& names,
                    std::vector<Piece>& pieces) {
  size_t used = 0;
  while (true) {
    const size_t slot = pattern.find("{}");
    if (slot == std::string_view::npos) break;
    pieces.push_back({std::string(pattern.substr(0, slot)), false});
    pieces.push_back({names.at(used++), true});
    pattern.remove_prefix(slot + 2);
  }
  pieces.push_back({std::string(pattern) + " ", false});
}

std::string Join(const std::vector<Piece>& pieces) {
  std::string out;
  for (const Piece& piece : pieces) out += piece.text;
  while (!out.empty() && out.back() == ' ') out.pop_back();
  return out;
}

bool SingleWord(const std::string& name) {
  return name.find(' ') == std::string::npos;
}

// Puts '#' in front of a random word of a filler piece.
void TagFillerWord(std::vector<Piece>& pieces, CorpusRng& rng) {
  std::vector<std::pair<size_t, size_t>> starts;  // (piece, byte offset)
  for (size_t p = 0; p < pieces.size(); ++p) {
    if (pieces[p].location) continue;
    const std::string& text = pieces[p].text;
    for (size_t i = 0; i < text.size(); ++i) {
      const bool boundary = i == 0 || text[i - 1] == ' ';
      const auto c = static_cast<unsigned char>(text[i]);
      if (boundary && ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'))) {
        starts.emplace_back(p, i);
      }
    }
  }
  if (starts.empty()) return;
  const auto [piece, offset] = starts[rng.Uniform(starts.size())];
  pieces[piece].text.insert(offset, "#");
}

GoldRecord RenderRecord(std::string id, const std::vector<std::string>& names,
                        const GenSpec& spec, const Gazetteer& gazetteer,
                        CorpusRng& rng) {
  std::vector<std::string> surfaces;
  for (const std::string& name : names) {
    const bool misspell = CodePointCount(name) >= spec.min_misspell_length &&
                          rng.Bernoulli(spec.misspell_rate);
    surfaces.push_back(misspell ? PerturbName(name, gazetteer, rng) : name);
  }

  std::vector<Piece> pieces;
  if (spec.mentions) {
    pieces.push_back(
        {"@" + std::string(kHandles[rng.Uniform(kHandles.size())]) + " ",
         false});
  }
  size_t next = 0;
  while (next < surfaces.size()) {
    const size_t left = surfaces.size() - next;
    if (left >= 2 && rng.Bernoulli(0.5)) {
      const std::vector<std::string> pair = {surfaces[next],
                                             surfaces[next + 1]};
      const bool route =
          SingleWord(pair[0]) && SingleWord(pair[1]) && rng.Bernoulli(0.25);
      AppendTemplate(route ? kRoute : kTwoSlot[rng.Uniform(kTwoSlot.size())],
                     pair, pieces);
      next += 2;
    } else {
      AppendTemplate(kOneSlot[rng.Uniform(kOneSlot.size())],
                     {surfaces[next]}, pieces);
      next += 1;
    }
  }
  if (spec.min_tokens > 0) {
    while (Tokenize(Join(pieces)).size() < spec.min_tokens) {
      AppendTemplate(kFiller[rng.Uniform(kFiller.size())], {}, pieces);
    }
  } else {
    AppendTemplate(kFiller[rng.Uniform(kFiller.size())], {}, pieces);
  }

  if (spec.hashtags) {
    std::vector<size_t> locations;
    for (size_t p = 0; p < pieces.size(); ++p) {
      if (pieces[p].location) locations.push_back(p);
    }
    if (!locations.empty()) {
      pieces[locations[rng.Uniform(locations.size())]].text.insert(0, "#");
    }
    TagFillerWord(pieces, rng);
  }

  GoldRecord record;
  record.id = std::move(id);
  record.text = Join(pieces);
  record.expected = names;
  return record;
}

std::string CapitalizeFirst(std::string word) {
  if (!word.empty() && word[0] >= 'a' && word[0] <= 'z') {
    word[0] = static_cast<char>(word[0] - 'a' + 'A');
  }
  return word;
}

}  // namespace

std::vector<Document> GeneratedCorpus::Documents() const {
  std::vector<Document> out;
  out.reserve(gold.size());
  for (const GoldRecord& record : gold) out.push_back({record.id, record.text});
  return out;
}

std::string PerturbName(std::string_view canonical, const Gazetteer& gazetteer,
                        CorpusRng& rng) {
  const std::u32string chars = ToUtf32(canonical);
  const std::string key = NormalizeName(canonical);
  std::vector<size_t> letters;
  for (size_t i = 0; i < chars.size(); ++i) {
    if (IsLetter(chars[i])) letters.push_back(i);
  }
  if (letters.empty()) return std::string(canonical);
  for (int attempt = 0; attempt < 200; ++attempt) {
    std::u32string edited = chars;
    const size_t at = letters[rng.Uniform(letters.size())];
    const auto letter = static_cast<char32_t>(U'a' + rng.Uniform(26));
    switch (rng.Uniform(3)) {
      case 0:
        edited.insert(edited.begin() + at + rng.Uniform(2), letter);
        break;
      case 1:
        edited.erase(edited.begin() + at);
        break;
      default:
        edited[at] = letter;
        break;
    }
    std::string candidate = ToUtf8(edited);
    const std::string candidate_key = NormalizeName(candidate);
    if (Levenshtein(candidate_key, key) != 1) continue;
    if (gazetteer.Find(candidate_key) != nullptr) continue;
    // A misspelling as close to another name as to its own is ambiguous.
    const NormalizedDistance own = NormalizedGld(candidate_key, key);
    const bool ambiguous = std::any_of(
        gazetteer.names().begin(), gazetteer.names().end(),
        [&](const NameRef& other) {
          return gazetteer.entries()[other.entry].key != key &&
                 NormalizedGld(candidate_key, other.key) <= own;
        });
    if (ambiguous) continue;
    return candidate;
  }
  return std::string(canonical);
}

GeneratedCorpus GenerateFromNameLists(
    const std::vector<std::vector<std::string>>& name_lists,
    const GenSpec& spec, const Gazetteer& gazetteer) {
  CorpusRng rng(spec.seed);
  GeneratedCorpus corpus;
  for (size_t i = 0; i < name_lists.size(); ++i) {
    corpus.gold.push_back(RenderRecord("text-" + std::to_string(i + 1),
                                       name_lists[i], spec, gazetteer, rng));
  }
  return corpus;
}

GeneratedCorpus Generate(const GenSpec& spec, const Gazetteer& gazetteer) {
  if (gazetteer.empty()) {
    throw std::invalid_argument("cannot generate from an empty gazetteer");
  }
  if (spec.min_names == 0 || spec.min_names > spec.max_names) {
    throw std::invalid_argument("invalid names-per-text range");
  }
  CorpusRng rng(spec.seed);
  const auto& entries = gazetteer.entries();
  GeneratedCorpus corpus;
  for (size_t t = 0; t < spec.texts; ++t) {
    const size_t want =
        std::min(entries.size(),
                 spec.min_names +
                     rng.Uniform(spec.max_names - spec.min_names + 1));
    std::vector<std::string> names;
    std::unordered_set<size_t> taken;
    while (names.size() < want) {
      const size_t pick = rng.Uniform(entries.size());
      if (taken.insert(pick).second) names.push_back(entries[pick].canonical);
    }
    corpus.gold.push_back(RenderRecord("text-" + std::to_string(t + 1), names,
                                       spec, gazetteer, rng));
  }
  return corpus;
}

std::string SyntheticGazetteerTsv(size_t count, uint64_t seed) {
  static const std::vector<std::string_view> kSyllables = {
      "ba",  "bo",  "bou", "da", "di",  "dou", "ga",  "go",  "gou", "ka",
      "ko",  "kou", "la",  "lo", "ma",  "mo",  "na",  "no",  "nou", "ou",
      "pa",  "sa",  "so",  "sou", "ta", "to",  "tou", "ya",  "za",  "zi",
      "ré",  "gué", "dja", "ngo", "ri", "fa",  "bé",  "ti",  "yé",  "kan",
      "dé",  "sé",  "wa",  "po", "mé",  "rou", "lé",  "gui", "kin", "tan"};
  CorpusRng rng(seed);
  auto word = [&] {
    std::string w;
    const size_t syllables = 2 + rng.Uniform(3);
    for (size_t i = 0; i < syllables; ++i) {
      w += kSyllables[rng.Uniform(kSyllables.size())];
    }
    return CapitalizeFirst(w);
  };

  std::unordered_set<std::string> keys;
  std::vector<std::string> provinces;
  std::string out = "# synthetic gazetteer, seed " + std::to_string(seed) + "\n";
  size_t made = 0;
  while (made < count) {
    std::string name = word();
    const size_t shape = rng.Uniform(100);
    if (shape < 8) {
      name += " " + word();
    } else if (shape < 10) {
      name = "N_" + CapitalizeFirst(name.substr(0, 1)) + name.substr(1);
    }
    if (!keys.insert(NormalizeName(name)).second) continue;
    std::string level;
    std::string parent;
    if (made < 13) {
      level = "region";
    } else if (made < 58) {
      level = "province";
      provinces.push_back(name);
    } else {
      level = made < 400 ? "commune" : "village";
      parent = provinces[rng.Uniform(provinces.size())];
    }
    out += name + "\t" + level + "\t" + parent + "\t\n";
    ++made;
  }
  return out;
}

const std::vector<std::vector<std::string>>& ReferenceNameLists() {
  static const auto* const kLists = new std::vector<std::vector<std::string>>{
      {"Komandjari", "Gayérie"},
      {"Oudalan", "Zigberi", "Markoye"},
      {"Seno", "Bilakoka", "Gorgadji"},
      {"Oudalan", "Gorom"},
      {"Poni", "Djigouè"},
      {"Oudalan", "Deou"},
      {"Soum", "kelbo"},
      {"Tuy", "Bereba"},
      {"Loroum", "Bouna", "Titao"},
      {"Bam", "Bourzanga"},
      {"Toboulé", "Damba", "Soboulé", "Nassoumbou"},
      {"Tapoa", "Partiaga"},
      {"Bam", "Komsilga", "Minima", "Zimtenga"},
      {"Tapoa", "Boungou", "Nadiabondi"},
      {"Banwa", "Solenzo"},
      {"Tanwalbougou", "Ougarou"},
      {"Kossi", "Bourasso", "Dedougou", "Nouna"},
      {"Tapoa", "Sambalgou"},
      {"Gourma", "Nagré"},
      {"Kéné Dougou", "N_Dorola"},
  };
  return *kLists;
}

Gazetteer ReferenceGazetteer() {
  GazetteerBuilder builder;
  std::unordered_set<std::string> seen;
  for (const auto& list : ReferenceNameLists()) {
    for (const std::string& name : list) {
      if (seen.insert(NormalizeName(name)).second) {
        builder.Add(name, Level::kUnknown);
      }
    }
  }
  return std::move(builder).Build();
}

}  // namespace locxtract
