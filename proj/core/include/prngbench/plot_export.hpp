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

#ifndef PRNGBENCH_PLOT_EXPORT_HPP_
#define PRNGBENCH_PLOT_EXPORT_HPP_

// Tabular exports of aggregates.
//
// aggregate CSV     generator,total_streams,avg_failures_suspicious,avg_failures_extreme
// histogram TSV     failures<TAB>streams, ascending failure count
// profile TSV       test family variant statistic bigcrush rate plotted_rate clipped
//
// With a rate cap, plotted_rate = min(rate, cap) and clipped is 1 when the
// cap was applied.

#include <filesystem>
#include <optional>
#include <ostream>
#include <span>

#include "prngbench/analysis.hpp"

namespace prngbench {

void write_aggregate_csv(std::ostream& out, std::span<const AggregateReport> rows);
void write_histogram_tsv(std::ostream& out, const AggregateReport& agg);
void write_profile_tsv(std::ostream& out, const AggregateReport& agg,
                       std::optional<double> rate_cap = std::nullopt);

enum class PlotData { Histogram, Profile };

// File variant of the two TSV writers; throws IoError.
void export_plot_data(const AggregateReport& agg, PlotData kind,
                      const std::filesystem::path& path,
                      std::optional<double> rate_cap = std::nullopt);

}  // namespace prngbench

#endif  // PRNGBENCH_PLOT_EXPORT_HPP_
