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

// One run of each desk-battery test on a PCG32 stream, and the full battery.

#include <benchmark/benchmark.h>

#include "prngbench/battery.hpp"
#include "prngbench/word_source.hpp"

namespace {

void BM_DeskTest(benchmark::State& state) {
  const prngbench::BatteryConfig desk = prngbench::desk_preset();
  const prngbench::TestSpec& spec = desk.tests.at(static_cast<std::size_t>(state.range(0)));
  state.SetLabel(spec.id.label());
  std::uint64_t seed = 1;
  for (auto _ : state) {
    prngbench::GeneratorSource src(
        prngbench::stream_from_seed(prngbench::GeneratorKind::Pcg32, seed++));
    benchmark::DoNotOptimize(prngbench::run_statistics(spec, src));
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<std::int64_t>(prngbench::words_required(spec)));
}
BENCHMARK(BM_DeskTest)->DenseRange(0, 11)->Unit(benchmark::kMillisecond);

void BM_Battery(benchmark::State& state, const char* preset) {
  const prngbench::BatteryConfig config = prngbench::preset(preset);
  std::uint64_t seed = 1;
  for (auto _ : state) {
    const auto g = prngbench::stream_from_seed(prngbench::GeneratorKind::Philox4x32_10, seed++);
    benchmark::DoNotOptimize(prngbench::run_battery(g, config));
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<std::int64_t>(prngbench::words_required(config)));
}
BENCHMARK_CAPTURE(BM_Battery, smoke, "smoke")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Battery, desk, "desk")->Unit(benchmark::kMillisecond);

}  // namespace
