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

// locxtract-gen: writes synthetic gazetteers and gold/raw corpora.

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"
#include "locxtract/corpusgen.h"
#include "locxtract/evaluate.h"
#include "locxtract/gazetteer.h"

namespace {

bool WriteFile(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
  return static_cast<bool>(out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Synthetic corpus generator for locxtract", "locxtract-gen"};
  app.require_subcommand(1);

  size_t count = 10000;
  uint64_t gazetteer_seed = 7;
  std::string gazetteer_out;
  bool reference_gazetteer = false;
  CLI::App* gaz = app.add_subcommand("gazetteer", "Synthetic gazetteer TSV");
  gaz->add_option("--count", count);
  gaz->add_option("--seed", gazetteer_seed);
  gaz->add_flag("--reference", reference_gazetteer,
                "Write the built-in reference gazetteer instead");
  gaz->add_option("-o,--output", gazetteer_out)->required();

  locxtract::GenSpec spec;
  std::string gazetteer_path;
  std::string gold_out;
  std::string raw_out;
  bool reference = false;
  bool no_hashtags = false;
  bool no_mentions = false;
  CLI::App* corpus = app.add_subcommand("corpus", "Gold and raw JSON lines");
  corpus->add_option("-g,--gazetteer", gazetteer_path,
                     "Gazetteer to sample names from");
  corpus->add_flag("--reference", reference,
                   "Embed the twenty reference location lists instead of "
                   "sampling (uses the matching built-in gazetteer)");
  corpus->add_option("--seed", spec.seed);
  corpus->add_option("--texts", spec.texts);
  corpus->add_option("--min-names", spec.min_names);
  corpus->add_option("--max-names", spec.max_names);
  corpus->add_option("--misspell-rate", spec.misspell_rate)
      ->check(CLI::Range(0.0, 1.0));
  corpus->add_option("--min-tokens", spec.min_tokens);
  corpus->add_flag("--no-hashtags", no_hashtags);
  corpus->add_flag("--no-mentions", no_mentions);
  corpus->add_option("--gold", gold_out, "Gold JSON-lines output")->required();
  corpus->add_option("--raw", raw_out, "Raw JSON-lines output");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gaz->parsed()) {
      const std::string tsv =
          reference_gazetteer
              ? locxtract::ToTsv(locxtract::ReferenceGazetteer())
              : locxtract::SyntheticGazetteerTsv(count, gazetteer_seed);
      if (!WriteFile(gazetteer_out, tsv)) {
        std::cerr << "error: cannot write " << gazetteer_out << "\n";
        return 1;
      }
      return 0;
    }
    spec.hashtags = !no_hashtags;
    spec.mentions = !no_mentions;
    locxtract::GeneratedCorpus generated;
    if (reference) {
      generated = locxtract::GenerateFromNameLists(
          locxtract::ReferenceNameLists(), spec,
          locxtract::ReferenceGazetteer());
    } else {
      if (gazetteer_path.empty()) {
        std::cerr << "error: --gazetteer or --reference is required\n";
        return 2;
      }
      const auto loaded = locxtract::LoadGazetteerFile(gazetteer_path);
      if (!loaded.ok()) {
        std::cerr << "error: gazetteer has " << loaded.issues.size()
                  << " rejected line(s)\n";
        return 1;
      }
      generated = locxtract::Generate(spec, loaded.gazetteer);
    }
    std::string gold;
    std::string raw;
    for (const auto& record : generated.gold) {
      gold += locxtract::GoldToJsonLine(record) + "\n";
      raw += nlohmann::ordered_json{{"id", record.id}, {"text", record.text}}
                 .dump() +
             "\n";
    }
    if (!WriteFile(gold_out, gold) ||
        (!raw_out.empty() && !WriteFile(raw_out, raw))) {
      std::cerr << "error: cannot write output\n";
      return 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
