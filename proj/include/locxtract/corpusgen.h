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

#ifndef LOCXTRACT_CORPUSGEN_H_
#define LOCXTRACT_CORPUSGEN_H_

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "locxtract/evaluate.h"
#include "locxtract/gazetteer.h"
#include "locxtract/pipeline.h"

namespace locxtract {

// Deterministic generator of French incident-report style texts with
// known locations. Same spec and gazetteer, same bytes.
struct GenSpec {
  uint64_t seed = 1;
  size_t texts = 20;
  size_t min_names = 1;
  size_t max_names = 4;
  bool hashtags = true;
  bool mentions = true;
  // Probability that a name of at least min_misspell_length code points
  // is replaced by a single-edit misspelling.
  double misspell_rate = 0.0;
  size_t min_misspell_length = 5;
  // Filler sentences are appended until the text has this many tokens.
  size_t min_tokens = 0;
};

struct GeneratedCorpus {
  std::vector<GoldRecord> gold;

  std::vector<Document> Documents() const;
};

class CorpusRng {
 public:
  explicit CorpusRng(uint64_t seed) : engine_(seed) {}

  size_t Uniform(size_t n) { return n == 0 ? 0 : engine_() % n; }
  bool Bernoulli(double p) {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53 < p;
  }

 private:
  std::mt19937_64 engine_;
};

// Texts with names sampled from the gazetteer. Throws
// std::invalid_argument for an empty gazetteer or an empty name range.
GeneratedCorpus Generate(const GenSpec& spec, const Gazetteer& gazetteer);

// One text per list, embedding exactly the listed canonical names.
GeneratedCorpus GenerateFromNameLists(
    const std::vector<std::vector<std::string>>& name_lists,
    const GenSpec& spec, const Gazetteer& gazetteer);

// A copy of `canonical` with exactly one inserted, deleted or substituted
// letter: one edit from its key, and strictly closer to its own entry than
// to any other gazetteer name. Returns `canonical` unchanged if no such
// edit exists.
std::string PerturbName(std::string_view canonical, const Gazetteer& gazetteer,
                        CorpusRng& rng);

// A gazetteer TSV of `count` unique, pronounceable synthetic place names.
std::string SyntheticGazetteerTsv(size_t count, uint64_t seed);

// Location lists of twenty annotated incident reports from Burkina Faso.
// The reports themselves are not distributed; GenerateFromNameLists
// rebuilds synthetic texts around these lists.
const std::vector<std::vector<std::string>>& ReferenceNameLists();

// Gazetteer holding each distinct name of ReferenceNameLists once.
Gazetteer ReferenceGazetteer();

}  // namespace locxtract

#endif  // LOCXTRACT_CORPUSGEN_H_
