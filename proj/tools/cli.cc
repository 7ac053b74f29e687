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

#include "cli.h"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "locxtract/evaluate.h"
#include "locxtract/gazetteer.h"
#include "locxtract/io.h"
#include "locxtract/tokenizer.h"
#include "locxtract/unicode.h"

namespace locxtract::cli {

namespace {

struct ConfigFlags {
  std::string gazetteer;
  std::string config_file;
  double threshold = 0;
  size_t min_fuzzy_len = 0;
  bool no_dedupe = false;
  size_t jobs = 1;
  CLI::Option* threshold_opt = nullptr;
  CLI::Option* min_fuzzy_len_opt = nullptr;
};

void AddGazetteerFlag(CLI::App* app, std::string& path) {
  app->add_option("-g,--gazetteer", path, "Gazetteer TSV file")
      ->envname("LOCXTRACT_GAZETTEER")
      ->required();
}

void AddConfigFlags(CLI::App* app, ConfigFlags& flags) {
  AddGazetteerFlag(app, flags.gazetteer);
  app->add_option("--config", flags.config_file,
                  "JSON config file (threshold, min_fuzzy_len, dedupe, "
                  "stopwords)");
  flags.threshold_opt =
      app->add_option("--threshold", flags.threshold,
                      "Largest accepted normalized distance, in (0, 1]");
  flags.min_fuzzy_len_opt = app->add_option(
      "--min-fuzzy-len", flags.min_fuzzy_len,
      "Tokens shorter than this only match exactly");
  app->add_flag("--no-dedupe", flags.no_dedupe,
                "Keep repeated locations in the output list");
  app->add_option("--jobs", flags.jobs, "Worker threads")
      ->check(CLI::PositiveNumber);
}

// Defaults, then the config file, then explicit flags.
PipelineConfig ResolveConfig(const ConfigFlags& flags) {
  PipelineConfig config;
  if (!flags.config_file.empty()) {
    std::ifstream in(flags.config_file);
    if (!in) {
      throw std::runtime_error("cannot open config file: " +
                               flags.config_file);
    }
    const auto json = nlohmann::json::parse(in);
    if (!json.is_object()) {
      throw std::runtime_error("config file must hold a JSON object");
    }
    if (json.contains("threshold")) {
      config.threshold = json["threshold"].get<double>();
    }
    if (json.contains("min_fuzzy_len")) {
      config.min_fuzzy_len = json["min_fuzzy_len"].get<size_t>();
    }
    if (json.contains("dedupe")) config.dedupe = json["dedupe"].get<bool>();
    if (json.contains("stopwords")) {
      config.stopwords.clear();
      for (const auto& word : json["stopwords"]) {
        config.stopwords.insert(NormalizeName(word.get<std::string>()));
      }
    }
  }
  if (flags.threshold_opt->count() > 0) config.threshold = flags.threshold;
  if (flags.min_fuzzy_len_opt->count() > 0) {
    config.min_fuzzy_len = flags.min_fuzzy_len;
  }
  if (flags.no_dedupe) config.dedupe = false;
  config.Validate();
  return config;
}

std::optional<Gazetteer> LoadOrReport(const std::string& path,
                                      std::ostream& err) {
  LoadResult loaded;
  try {
    loaded = LoadGazetteerFile(path);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return std::nullopt;
  }
  for (const LoadIssue& issue : loaded.issues) {
    err << path << ":" << issue.line << ": " << LoadErrorName(issue.error)
        << ": " << issue.message << "\n";
  }
  if (!loaded.ok()) return std::nullopt;
  return std::move(loaded.gazetteer);
}

// Opens `path` for reading, or returns `fallback` for "-".
std::istream* OpenInput(const std::string& path, std::istream& fallback,
                        std::unique_ptr<std::ifstream>& holder) {
  if (path.empty() || path == "-") return &fallback;
  holder = std::make_unique<std::ifstream>(path, std::ios::binary);
  return *holder ? holder.get() : nullptr;
}

std::string ModeName(SearchMode mode) {
  return mode == SearchMode::kScan ? "scan" : "indexed";
}

double Seconds(std::chrono::nanoseconds d) {
  return std::chrono::duration<double>(d).count();
}

int RunExtract(const ConfigFlags& flags, const std::string& input_path,
               InputFormat input_format, const std::string& format,
               SearchMode mode, std::istream& in, std::ostream& out,
               std::ostream& err) {
  const auto gazetteer = LoadOrReport(flags.gazetteer, err);
  if (!gazetteer) return kGazetteerError;
  std::unique_ptr<std::ifstream> holder;
  std::istream* input = OpenInput(input_path, in, holder);
  if (input == nullptr) {
    err << "error: cannot open input: " << input_path << "\n";
    return kInputError;
  }
  const Extractor extractor(*gazetteer, ResolveConfig(flags));
  const DocumentBatch batch = ReadDocuments(*input, input_format);
  for (const InputIssue& issue : batch.issues) {
    err << "input line " << issue.line << ": " << issue.message << "\n";
  }
  const auto results = extractor.ExtractAll(batch.documents, flags.jobs, mode);
  for (const ExtractionResult& result : results) {
    out << (format == "tsv" ? ResultToTsvLine(result)
                            : ResultToJsonLine(result))
        << "\n";
  }
  return batch.issues.empty() ? kOk : kInputError;
}

int RunEval(const ConfigFlags& flags, const std::string& gold_path,
            const std::string& report_format, std::ostream& out,
            std::ostream& err) {
  const auto gazetteer = LoadOrReport(flags.gazetteer, err);
  if (!gazetteer) return kGazetteerError;
  std::ifstream gold_in(gold_path, std::ios::binary);
  if (!gold_in) {
    err << "error: cannot open gold corpus: " << gold_path << "\n";
    return kInputError;
  }
  const GoldBatch gold = ReadGold(gold_in);
  if (!gold.issues.empty()) {
    for (const InputIssue& issue : gold.issues) {
      err << gold_path << ":" << issue.line << ": " << issue.message << "\n";
    }
    return kInputError;
  }
  const Extractor extractor(*gazetteer, ResolveConfig(flags));
  const EvalReport report = EvaluateCorpus(gold.records, extractor, flags.jobs);
  const ReportFormat format =
      report_format == "json" ? ReportFormat::kJson : ReportFormat::kMarkdown;
  out << RenderReport(report, format);
  err << "evaluated " << report.rows.size() << " texts in "
      << report.runtime.count() << " ms\n";
  return kOk;
}

int RunValidate(const std::string& path, std::ostream& out, std::ostream& err) {
  LoadResult loaded;
  try {
    loaded = LoadGazetteerFile(path);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kGazetteerError;
  }
  const Gazetteer& g = loaded.gazetteer;
  nlohmann::ordered_json summary;
  summary["entries"] = g.size();
  summary["names"] = g.names().size();
  summary["multiword"] = g.multiword().size();
  nlohmann::ordered_json issues = nlohmann::ordered_json::array();
  for (const LoadIssue& issue : loaded.issues) {
    issues.push_back({{"line", issue.line},
                      {"error", std::string(LoadErrorName(issue.error))},
                      {"message", issue.message}});
  }
  summary["issues"] = std::move(issues);
  nlohmann::ordered_json unresolved = nlohmann::ordered_json::array();
  for (size_t entry : g.UnresolvedParents()) {
    unresolved.push_back(g.entries()[entry].canonical);
  }
  summary["unresolved_parents"] = std::move(unresolved);
  summary["valid"] = loaded.ok();
  out << summary.dump(2, ' ', false,
                      nlohmann::ordered_json::error_handler_t::replace)
      << "\n";
  for (const LoadIssue& issue : loaded.issues) {
    err << path << ":" << issue.line << ": " << LoadErrorName(issue.error)
        << ": " << issue.message << "\n";
  }
  return loaded.ok() ? kOk : kGazetteerError;
}

int RunBenchCommand(const ConfigFlags& flags, const std::string& corpus_path,
                    const std::string& mode_name, size_t repetitions,
                    std::ostream& out, std::ostream& err) {
  const auto gazetteer = LoadOrReport(flags.gazetteer, err);
  if (!gazetteer) return kGazetteerError;
  std::ifstream corpus_in(corpus_path, std::ios::binary);
  if (!corpus_in) {
    err << "error: cannot open corpus: " << corpus_path << "\n";
    return kInputError;
  }
  const DocumentBatch batch = ReadDocuments(corpus_in, InputFormat::kAuto);
  if (!batch.issues.empty()) {
    for (const InputIssue& issue : batch.issues) {
      err << corpus_path << ":" << issue.line << ": " << issue.message << "\n";
    }
    return kInputError;
  }
  const PipelineConfig config = ResolveConfig(flags);
  const Extractor extractor(*gazetteer, config);

  std::vector<SearchMode> modes;
  if (mode_name != "scan") modes.push_back(SearchMode::kIndexed);
  if (mode_name != "indexed") modes.push_back(SearchMode::kScan);
  const BenchReport report =
      RunBench(extractor, batch.documents, modes, repetitions, flags.jobs);

  nlohmann::ordered_json summary;
  summary["texts"] = report.texts;
  summary["tokens"] = report.tokens;
  nlohmann::ordered_json mode_list = nlohmann::ordered_json::array();
  for (SearchMode mode : modes) mode_list.push_back(ModeName(mode));
  summary["modes"] = std::move(mode_list);
  summary["repetitions"] = repetitions;
  summary["outputs_identical"] = report.outputs_identical;
  summary["config"] = {{"threshold", config.threshold},
                       {"min_fuzzy_len", config.min_fuzzy_len},
                       {"dedupe", config.dedupe},
                       {"stopwords", config.stopwords.size()}};
  out << summary.dump() << "\n";

  if (!report.outputs_identical) {
    err << "error: indexed and scan modes produced different output; "
           "timings withheld\n";
    return kModeMismatch;
  }
  for (const ModeTiming& timing : report.timings) {
    const double seconds = Seconds(timing.Median());
    err << "mode " << ModeName(timing.mode) << ": median " << seconds
        << " s over " << timing.runs.size() << " run(s), "
        << (seconds > 0 ? report.tokens / seconds : 0.0) << " tokens/s\n";
  }
  if (auto speedup = report.Speedup()) {
    err << "speedup (scan / indexed): " << *speedup << "x\n";
  }
  return kOk;
}

}  // namespace

std::chrono::nanoseconds ModeTiming::Median() const {
  if (runs.empty()) return std::chrono::nanoseconds{0};
  std::vector<std::chrono::nanoseconds> sorted = runs;
  std::sort(sorted.begin(), sorted.end());
  const size_t mid = sorted.size() / 2;
  if (sorted.size() % 2 == 1) return sorted[mid];
  return (sorted[mid - 1] + sorted[mid]) / 2;
}

std::optional<double> BenchReport::Speedup() const {
  const ModeTiming* indexed = nullptr;
  const ModeTiming* scan = nullptr;
  for (const ModeTiming& timing : timings) {
    (timing.mode == SearchMode::kScan ? scan : indexed) = &timing;
  }
  if (!indexed || !scan || indexed->Median().count() == 0) return std::nullopt;
  return Seconds(scan->Median()) / Seconds(indexed->Median());
}

BenchReport RunBench(const Extractor& extractor,
                     const std::vector<Document>& documents,
                     const std::vector<SearchMode>& modes, size_t repetitions,
                     size_t jobs) {
  BenchReport report;
  report.texts = documents.size();
  for (const Document& doc : documents) {
    report.tokens +=
        Tokenize(Preprocess(doc.text, extractor.hyphenator()).text).size();
  }
  repetitions = std::max<size_t>(repetitions, 1);

  std::vector<std::string> reference;
  for (SearchMode mode : modes) {
    ModeTiming timing;
    timing.mode = mode;
    for (size_t rep = 0; rep < repetitions; ++rep) {
      const auto start = std::chrono::steady_clock::now();
      const auto results = extractor.ExtractAll(documents, jobs, mode);
      timing.runs.push_back(std::chrono::steady_clock::now() - start);
      if (rep > 0) continue;
      std::vector<std::string> lines;
      lines.reserve(results.size());
      for (const auto& result : results) {
        lines.push_back(ResultToJsonLine(result));
      }
      if (reference.empty() && !lines.empty()) {
        reference = std::move(lines);
      } else if (lines != reference) {
        report.outputs_identical = false;
        report.timings.push_back(std::move(timing));
        return report;
      }
    }
    report.timings.push_back(std::move(timing));
  }
  return report;
}

int Run(int argc, const char* const* argv, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Gazetteer-based location extraction for noisy social text",
               "locxtract"};
  app.require_subcommand(1);

  ConfigFlags extract_flags;
  std::string input_path = "-";
  std::string input_format = "auto";
  std::string output_format = "json";
  std::string extract_mode = "indexed";
  CLI::App* extract = app.add_subcommand("extract", "Extract locations");
  AddConfigFlags(extract, extract_flags);
  extract->add_option("-i,--input", input_path, "Input file, - for stdin");
  extract->add_option("--input-format", input_format)
      ->check(CLI::IsMember({"auto", "jsonl", "text"}));
  extract->add_option("--format", output_format, "Output format")
      ->check(CLI::IsMember({"json", "tsv"}));
  extract->add_option("--mode", extract_mode, "Name search strategy")
      ->check(CLI::IsMember({"indexed", "scan"}));

  ConfigFlags eval_flags;
  std::string gold_path;
  std::string report_format = "markdown";
  CLI::App* eval = app.add_subcommand("eval", "Score against a gold corpus");
  AddConfigFlags(eval, eval_flags);
  eval->add_option("--gold", gold_path, "Gold JSON-lines corpus")->required();
  eval->add_option("--report", report_format, "Report format")
      ->check(CLI::IsMember({"markdown", "json"}));

  std::string validate_path;
  CLI::App* validate =
      app.add_subcommand("gazetteer-validate", "Check a gazetteer file");
  AddGazetteerFlag(validate, validate_path);

  ConfigFlags bench_flags;
  std::string corpus_path;
  std::string bench_mode = "both";
  size_t repetitions = 1;
  CLI::App* bench =
      app.add_subcommand("bench", "Time indexed against linear-scan search");
  AddConfigFlags(bench, bench_flags);
  bench->add_option("--corpus", corpus_path, "JSON-lines corpus")->required();
  bench->add_option("--mode", bench_mode)
      ->check(CLI::IsMember({"scan", "indexed", "both"}));
  bench->add_option("--repetitions", repetitions)->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (extract->parsed()) {
      const InputFormat format = input_format == "jsonl" ? InputFormat::kJsonl
                                 : input_format == "text" ? InputFormat::kText
                                                          : InputFormat::kAuto;
      return RunExtract(extract_flags, input_path, format, output_format,
                        extract_mode == "scan" ? SearchMode::kScan
                                               : SearchMode::kIndexed,
                        in, out, err);
    }
    if (eval->parsed()) {
      return RunEval(eval_flags, gold_path, report_format, out, err);
    }
    if (validate->parsed()) return RunValidate(validate_path, out, err);
    if (bench->parsed()) {
      return RunBenchCommand(bench_flags, corpus_path, bench_mode, repetitions,
                             out, err);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace locxtract::cli
