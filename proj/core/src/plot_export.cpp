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

#include "prngbench/plot_export.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <string>

#include "prngbench/error.hpp"

namespace prngbench {
namespace {

// Shortest text that reads back to the same double.
std::string fmt(double v) {
  std::array<char, 32> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), res.ptr);
}

std::string join_ints(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s.empty() ? "-" : s;
}

}  // namespace

void write_aggregate_csv(std::ostream& out, std::span<const AggregateReport> rows) {
  out << "generator,total_streams,avg_failures_suspicious,avg_failures_extreme\n";
  for (const auto& r : rows) {
    out << r.generator << ',' << r.total_streams << ',' << fmt(r.avg_failures_suspicious) << ','
        << fmt(r.avg_failures_extreme) << '\n';
  }
}

void write_histogram_tsv(std::ostream& out, const AggregateReport& agg) {
  out << "failures\tstreams\n";
  for (const auto& [failures, streams] : agg.histogram) {
    out << failures << '\t' << streams << '\n';
  }
}

void write_profile_tsv(std::ostream& out, const AggregateReport& agg,
                       std::optional<double> rate_cap) {
  out << "test\tfamily\tvariant\tstatistic\tbigcrush\trate\tplotted_rate\tclipped\n";
  for (const auto& [id, rate] : agg.per_test_failure_rate) {
    const bool clipped = rate_cap && rate > *rate_cap;
    const double plotted = clipped ? *rate_cap : rate;
    out << id.label() << '\t' << to_string(id.family) << '\t' << id.variant_index << '\t'
        << (id.statistic.empty() ? "-" : id.statistic) << '\t' << join_ints(id.bigcrush_indices)
        << '\t' << fmt(rate) << '\t' << fmt(plotted) << '\t' << (clipped ? 1 : 0) << '\n';
  }
}

void export_plot_data(const AggregateReport& agg, PlotData kind,
                      const std::filesystem::path& path, std::optional<double> rate_cap) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  if (kind == PlotData::Histogram) {
    write_histogram_tsv(out, agg);
  } else {
    write_profile_tsv(out, agg, rate_cap);
  }
  if (!out) throw IoError("write failed for " + path.string());
}

}  // namespace prngbench
