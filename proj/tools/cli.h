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

#ifndef LOCXTRACT_TOOLS_CLI_H_
#define LOCXTRACT_TOOLS_CLI_H_

#include <chrono>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "locxtract/pipeline.h"

namespace locxtract::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kGazetteerError = 1;
inline constexpr int kInputError = 2;
inline constexpr int kModeMismatch = 3;

// Entry point of the `locxtract` tool: extract, eval, gazetteer-validate
// and bench. Primary output goes to `out`; diagnostics and timings to
// `err`.
int Run(int argc, const char* const* argv, std::istream& in, std::ostream& out,
        std::ostream& err);

struct ModeTiming {
  SearchMode mode = SearchMode::kIndexed;
  std::vector<std::chrono::nanoseconds> runs;

  std::chrono::nanoseconds Median() const;
};

struct BenchReport {
  size_t texts = 0;
  size_t tokens = 0;
  bool outputs_identical = true;
  std::vector<ModeTiming> timings;

  // Scan median over indexed median; empty unless both modes ran.
  std::optional<double> Speedup() const;
};

// Times extraction over `documents` in each mode. With two modes, the
// first repetition doubles as the correctness gate: outputs are compared
// before any further timing, and on disagreement the report comes back
// with outputs_identical = false and only that run timed.
BenchReport RunBench(const Extractor& extractor,
                     const std::vector<Document>& documents,
                     const std::vector<SearchMode>& modes, size_t repetitions,
                     size_t jobs = 1);

}  // namespace locxtract::cli

#endif  // LOCXTRACT_TOOLS_CLI_H_
