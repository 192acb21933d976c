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

// Incremental Berlekamp-Massey cost per bit, and the jump-count moment table.

#include <benchmark/benchmark.h>

#include <vector>

#include "prngbench/generators.hpp"
#include "prngbench/linear_comp.hpp"
#include "prngbench/linear_complexity.hpp"

namespace {

std::vector<std::uint8_t> random_bits(std::size_t n) {
  prngbench::GeneratorState g = prngbench::stream_from_seed(prngbench::GeneratorKind::Pcg32, 7);
  std::vector<std::uint8_t> bits(n);
  for (auto& b : bits) b = prngbench::next_word(g) >> 31;
  return bits;
}

void BM_Tracker(benchmark::State& state) {
  const auto bits = random_bits(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    prngbench::LinearComplexityTracker t(bits.size());
    for (auto b : bits) t.push(b != 0);
    benchmark::DoNotOptimize(t.complexity());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Tracker)->RangeMultiplier(2)->Range(1 << 10, 1 << 16)->Complexity(benchmark::oNSquared);

void BM_JumpMoments(benchmark::State& state) {
  // The moments are cached per n, so each iteration uses a fresh n.
  std::uint64_t n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(prngbench::jump_count_moments(n++));
}
BENCHMARK(BM_JumpMoments)->Arg(5000)->Arg(50000)->Iterations(8);

}  // namespace
