// Copyright 2026 The prngbench Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PRNGBENCH_BIGCRUSH_IMPORT_HPP_
#define PRNGBENCH_BIGCRUSH_IMPORT_HPP_

// Reader for TestU01 battery summaries ("Summary results of BigCrush"), so
// that full-scale external runs go through the same aggregation.
//
// Only tests listed under "The following tests gave p-values outside ..."
// are recorded; everything else passed. "eps" is read as 1e-301, "eps1" as
// 1e-16, and "1 - eps1" / "1 - eps" as 1 - 1e-16.

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "prngbench/classification.hpp"
#include "prngbench/harness.hpp"

namespace prngbench {

struct BigCrushEntry {
  int index = 0;
  std::string name;
  double p_value = 0.5;
};

struct BigCrushSummary {
  std::string battery;    // "BigCrush", "Crush", ...
  std::string generator;  // as printed, may be empty
  std::optional<int> statistic_count;
  std::vector<BigCrushEntry> entries;
};

// Fingerprint given to imported reports; they all share it.
inline constexpr std::string_view kBigCrushFingerprint = "external:testu01-summary";

// Every summary block in the text, in order. Throws FormatError on a block
// whose failure table cannot be read.
std::vector<BigCrushSummary> parse_bigcrush_summaries(std::string_view text);

// A file, or every regular file of a directory in name order.
std::vector<BigCrushSummary> load_bigcrush_summaries(const std::filesystem::path& path);

// "eps", "eps1", "1 - eps1", "4.4e-4", "1 - 7.3e-5", ...
double parse_bigcrush_p(std::string_view text);

// One report per summary, index = position, seed = position.
std::vector<BatteryReport> bigcrush_reports(std::span<const BigCrushSummary> summaries,
                                            GeneratorKind kind,
                                            const ClassificationPolicy& policy = {});

}  // namespace prngbench

#endif  // PRNGBENCH_BIGCRUSH_IMPORT_HPP_
