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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "locxtract/corpusgen.h"
#include "locxtract/edit_distance.h"
#include "locxtract/evaluate.h"
#include "locxtract/fuzzy_index.h"
#include "locxtract/gazetteer.h"
#include "locxtract/io.h"
#include "locxtract/pipeline.h"
#include "locxtract/recognizer.h"
#include "locxtract/textprep.h"
#include "locxtract/tokenizer.h"
#include "locxtract/unicode.h"

namespace py = pybind11;

namespace locxtract {
namespace {

Gazetteer CheckedGazetteer(LoadResult loaded) {
  if (!loaded.ok()) {
    std::ostringstream message;
    message << loaded.issues.size() << " rejected gazetteer line(s)";
    for (const LoadIssue& issue : loaded.issues) {
      message << "\n  line " << issue.line << ": " << LoadErrorName(issue.error)
              << ": " << issue.message;
    }
    throw py::value_error(message.str());
  }
  return std::move(loaded.gazetteer);
}

SearchMode ParseMode(const std::string& mode) {
  if (mode == "indexed") return SearchMode::kIndexed;
  if (mode == "scan") return SearchMode::kScan;
  throw py::value_error("mode must be 'indexed' or 'scan'");
}

std::vector<GoldRecord> ToGold(const py::iterable& records) {
  std::vector<GoldRecord> gold;
  for (const py::handle& item : records) {
    const py::dict record = py::reinterpret_borrow<py::dict>(item);
    gold.push_back({record["id"].cast<std::string>(),
                    record["text"].cast<std::string>(),
                    record["expected"].cast<std::vector<std::string>>()});
  }
  return gold;
}

}  // namespace
}  // namespace locxtract

PYBIND11_MODULE(_locxtract, m) {
  using namespace locxtract;
  m.doc() = "Gazetteer-based fuzzy location extraction";

  m.def("normalize_name", &NormalizeName, py::arg("raw"));
  m.def("levenshtein",
        py::overload_cast<std::string_view, std::string_view>(&Levenshtein),
        py::arg("a"), py::arg("b"));
  m.def(
      "normalized_gld",
      [](std::string_view a, std::string_view b) {
        return NormalizedGld(a, b).value();
      },
      py::arg("a"), py::arg("b"));
  m.def(
      "normalized_gld_fraction",
      [](std::string_view a, std::string_view b) {
        const NormalizedDistance d = NormalizedGld(a, b);
        return py::make_tuple(d.numerator(), d.denominator());
      },
      py::arg("a"), py::arg("b"),
      "Exact (numerator, denominator) of the normalized distance.");
  m.def("strip_symbols", &StripSymbols, py::arg("raw"));

  py::class_<Token>(m, "Token")
      .def_readonly("text", &Token::text)
      .def_readonly("start", &Token::start)
      .def_readonly("end", &Token::end)
      .def("__repr__", [](const Token& t) {
        return "Token(" + py::repr(py::str(t.text)).cast<std::string>() + ", " +
               std::to_string(t.start) + ", " + std::to_string(t.end) + ")";
      });
  m.def("tokenize", &Tokenize, py::arg("clean_text"));

  py::class_<Gazetteer>(m, "Gazetteer")
      .def_static(
          "from_tsv",
          [](const std::string& text) {
            return CheckedGazetteer(LoadGazetteerFromString(text));
          },
          py::arg("text"))
      .def_static(
          "load",
          [](const std::string& path) {
            return CheckedGazetteer(LoadGazetteerFile(path));
          },
          py::arg("path"))
      .def_static("reference", &ReferenceGazetteer)
      .def("__len__", &Gazetteer::size)
      .def("__contains__",
           [](const Gazetteer& g, const std::string& name) {
             return g.Find(NormalizeName(name)) != nullptr;
           })
      .def("canonicals",
           [](const Gazetteer& g) {
             std::vector<std::string> out;
             for (const auto& e : g.entries()) out.push_back(e.canonical);
             return out;
           })
      .def("names",
           [](const Gazetteer& g) {
             std::vector<std::pair<std::string, std::string>> out;
             for (const NameRef& ref : g.names()) {
               out.emplace_back(ref.key, g.entries()[ref.entry].canonical);
             }
             return out;
           },
           "(key, canonical) pairs: entry keys then aliases, in file order.")
      .def("to_tsv", &ToTsv);

  m.def(
      "preprocess",
      [](std::string_view raw, const Gazetteer& g) {
        return Preprocess(raw, g).text;
      },
      py::arg("raw"), py::arg("gazetteer"));

  py::class_<PipelineConfig>(m, "PipelineConfig")
      .def(py::init<>())
      .def_readwrite("threshold", &PipelineConfig::threshold)
      .def_readwrite("min_fuzzy_len", &PipelineConfig::min_fuzzy_len)
      .def_readwrite("dedupe", &PipelineConfig::dedupe)
      .def_readwrite("stopwords", &PipelineConfig::stopwords);

  py::class_<LocationMatch>(m, "LocationMatch")
      .def_property_readonly("token", [](const LocationMatch& lm) { return lm.token.text; })
      .def_property_readonly("start", [](const LocationMatch& lm) { return lm.token.start; })
      .def_property_readonly("end", [](const LocationMatch& lm) { return lm.token.end; })
      .def_readonly("canonical", &LocationMatch::canonical)
      .def_property_readonly("distance", &LocationMatch::score)
      .def_readonly("exact", &LocationMatch::exact);

  py::class_<ExtractionResult>(m, "ExtractionResult")
      .def_readonly("doc_id", &ExtractionResult::doc_id)
      .def_readonly("locations", &ExtractionResult::locations)
      .def_readonly("matches", &ExtractionResult::matches)
      .def("to_json", &ResultToJsonLine);

  py::class_<Extractor>(m, "Extractor")
      .def(py::init([](const Gazetteer& g, std::optional<PipelineConfig> config) {
             try {
               return Extractor(g, config.value_or(PipelineConfig{}));
             } catch (const std::invalid_argument& e) {
               throw py::value_error(e.what());
             }
           }),
           py::arg("gazetteer"), py::arg("config") = py::none())
      .def(
          "extract",
          [](const Extractor& x, const std::string& text, const std::string& doc_id,
             const std::string& mode) {
            return x.Extract(doc_id, text, ParseMode(mode));
          },
          py::arg("text"), py::arg("doc_id") = "", py::arg("mode") = "indexed")
      .def(
          "extract_all",
          [](const Extractor& x, const std::vector<std::string>& texts,
             size_t jobs, const std::string& mode) {
            std::vector<Document> docs;
            for (size_t i = 0; i < texts.size(); ++i) {
              docs.push_back({std::to_string(i), texts[i]});
            }
            const SearchMode search = ParseMode(mode);
            py::gil_scoped_release release;
            return x.ExtractAll(docs, jobs, search);
          },
          py::arg("texts"), py::arg("jobs") = 1, py::arg("mode") = "indexed",
          "Results in input order; doc ids are the list positions.")
      .def(
          "best_match",
          [](const Extractor& x, const std::string& word,
             const std::string& mode) -> std::optional<py::tuple> {
            const auto hit = LookupWord(MatchForm(NormalizeName(word)), x.index(),
                                        x.config(), ParseMode(mode));
            if (!hit) return std::nullopt;
            return py::make_tuple(x.index().names().canonical(hit->name),
                                  hit->distance.value());
          },
          py::arg("word"), py::arg("mode") = "indexed");

  py::class_<EvalReport>(m, "EvalReport")
      .def_readonly("micro_recall", &EvalReport::micro_recall)
      .def_readonly("micro_precision", &EvalReport::micro_precision)
      .def_readonly("total_expected", &EvalReport::total_expected)
      .def_readonly("total_correct", &EvalReport::total_correct)
      .def_readonly("warnings", &EvalReport::warnings)
      .def("render", [](const EvalReport& r, const std::string& format) {
             if (format == "markdown") return RenderReport(r, ReportFormat::kMarkdown);
             if (format == "json") return RenderReport(r, ReportFormat::kJson);
             throw py::value_error("format must be 'markdown' or 'json'");
           },
           py::arg("format") = "markdown");

  m.def(
      "evaluate",
      [](const py::iterable& gold, const Extractor& x, size_t jobs) {
        const std::vector<GoldRecord> records = ToGold(gold);
        py::gil_scoped_release release;
        return EvaluateCorpus(records, x, jobs);
      },
      py::arg("gold"), py::arg("extractor"), py::arg("jobs") = 1,
      "Scores dicts with 'id', 'text' and 'expected' keys.");
}
