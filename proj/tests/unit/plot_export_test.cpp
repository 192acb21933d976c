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

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "prngbench/error.hpp"
#include "synthetic.hpp"

namespace prngbench {
namespace {

TEST(PlotExport, EmptyAggregateHasHeadersOnly) {
  AggregateReport empty;
  std::ostringstream hist, prof, csv;
  write_histogram_tsv(hist, empty);
  write_profile_tsv(prof, empty);
  write_aggregate_csv(csv, {});
  EXPECT_EQ(hist.str(), "failures\tstreams\n");
  EXPECT_EQ(prof.str(), "test\tfamily\tvariant\tstatistic\tbigcrush\trate\tplotted_rate\tclipped\n");
  EXPECT_EQ(csv.str(), "generator,total_streams,avg_failures_suspicious,avg_failures_extreme\n");
}

TEST(PlotExport, HistogramRowsInOrder) {
  AggregateReport a;
  a.histogram = {{4, 4}, {0, 620}, {2, 60}, {1, 200}, {3, 12}};
  std::ostringstream out;
  write_histogram_tsv(out, a);
  EXPECT_EQ(out.str(), "failures\tstreams\n0\t620\n1\t200\n2\t60\n3\t12\n4\t4\n");
}

TEST(PlotExport, RateCapMarksClippedRows) {
  AggregateReport a;
  a.per_test_failure_rate[TestId{TestFamily::LinearComp, 0, "Num", {80}}] = 1.0;
  a.per_test_failure_rate[TestId{TestFamily::SerialOver, 1, "X", {}}] = 0.0025;
  std::ostringstream out;
  write_profile_tsv(out, a, 0.03);
  EXPECT_EQ(out.str(),
            "test\tfamily\tvariant\tstatistic\tbigcrush\trate\tplotted_rate\tclipped\n"
            "SerialOver[1].X\tSerialOver\t1\tX\t-\t0.0025\t0.0025\t0\n"
            "LinearComp[0].Num\tLinearComp\t0\tNum\t80\t1\t0.03\t1\n");
}

TEST(PlotExport, AggregateCsv) {
  const auto a = aggregate({synthetic::report(0, 1), synthetic::report(1, 0)}, {}, "Pcg32");
  std::ostringstream out;
  write_aggregate_csv(out, std::span(&a, 1));
  EXPECT_EQ(out.str(),
            "generator,total_streams,avg_failures_suspicious,avg_failures_extreme\n"
            "Pcg32,2,0.5,0\n");
}

TEST(PlotExport, FileExport) {
  const auto dir = synthetic::scratch_dir("plot");
  AggregateReport a;
  a.histogram = {{0, 3}};
  export_plot_data(a, PlotData::Histogram, dir / "h.tsv");
  std::ifstream in(dir / "h.tsv");
  std::stringstream ss;
  ss << in.rdbuf();
  EXPECT_EQ(ss.str(), "failures\tstreams\n0\t3\n");
  EXPECT_THROW(export_plot_data(a, PlotData::Profile, dir / "missing" / "p.tsv"), IoError);
  std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace prngbench
