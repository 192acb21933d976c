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

// Word throughput of the three generators, plus jump-ahead cost.

#include <benchmark/benchmark.h>

#include <vector>

#include "prngbench/generators.hpp"

namespace {

using prngbench::GeneratorKind;

void BM_FillWords(benchmark::State& state, GeneratorKind kind) {
  prngbench::GeneratorState g = prngbench::stream_from_seed(kind, 42);
  std::vector<std::uint32_t> buf(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    prngbench::fill_words(g, buf);
    benchmark::DoNotOptimize(buf.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
  state.SetBytesProcessed(state.iterations() * state.range(0) * 4);
}
BENCHMARK_CAPTURE(BM_FillWords, mt19937, GeneratorKind::Mt19937)->Arg(8192);
BENCHMARK_CAPTURE(BM_FillWords, pcg32, GeneratorKind::Pcg32)->Arg(8192);
BENCHMARK_CAPTURE(BM_FillWords, philox4x32_10, GeneratorKind::Philox4x32_10)->Arg(8192);

void BM_NextWord(benchmark::State& state, GeneratorKind kind) {
  prngbench::GeneratorState g = prngbench::stream_from_seed(kind, 42);
  for (auto _ : state) benchmark::DoNotOptimize(prngbench::next_word(g));
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK_CAPTURE(BM_NextWord, mt19937, GeneratorKind::Mt19937);
BENCHMARK_CAPTURE(BM_NextWord, pcg32, GeneratorKind::Pcg32);
BENCHMARK_CAPTURE(BM_NextWord, philox4x32_10, GeneratorKind::Philox4x32_10);

void BM_Discard(benchmark::State& state, GeneratorKind kind) {
  const prngbench::GeneratorState start = prngbench::stream_from_seed(kind, 42);
  for (auto _ : state) {
    prngbench::GeneratorState g = start;
    prngbench::discard(g, static_cast<std::uint64_t>(state.range(0)));
    benchmark::DoNotOptimize(g);
  }
}
BENCHMARK_CAPTURE(BM_Discard, pcg32, GeneratorKind::Pcg32)->Arg(1 << 30);
BENCHMARK_CAPTURE(BM_Discard, philox4x32_10, GeneratorKind::Philox4x32_10)->Arg(1 << 30);
BENCHMARK_CAPTURE(BM_Discard, mt19937, GeneratorKind::Mt19937)->Arg(1 << 20);

void BM_PhiloxBlock(benchmark::State& state) {
  prngbench::PhiloxCounter c{};
  const prngbench::PhiloxKey k{0xdeadbeef, 0x12345678};
  for (auto _ : state) {
    benchmark::DoNotOptimize(prngbench::philox_block(c, k));
    prngbench::philox_increment(c);
  }
}
BENCHMARK(BM_PhiloxBlock);

}  // namespace
