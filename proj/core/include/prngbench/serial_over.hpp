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

#ifndef PRNGBENCH_SERIAL_OVER_HPP_
#define PRNGBENCH_SERIAL_OVER_HPP_

// Overlapping serial test. Each uniform is mapped to one of d cells, the n
// overlapping t-tuples of the circularized sequence are counted in k = d^t
// cells, and
//
//   X = psi2(t) - psi2(t - 1),   psi2(s) = (d^s / n) * sum N_s^2 - n,
//
// is compared with a chi-square law of d^t - d^(t-1) degrees of freedom.

#include <cstdint>
#include <span>

#include "prngbench/test_types.hpp"
#include "prngbench/word_source.hpp"

namespace prngbench {

// Largest supported d^t (counts are held in memory).
inline constexpr std::uint64_t kSerialOverMaxCells = std::uint64_t{1} << 28;

// X for given cell indices (each in [0, d)). No density requirement, so it
// also serves small hand-checked cases. Needs t >= 2 and cells.size() >= 1.
double serial_over_statistic(std::span<const std::uint32_t> cells, std::uint64_t d, int t);

// Requires t >= 2, d >= 2, d^t <= 2^28 and n >= 10 d^t.
void validate_serial_over(const TestParams& p);

// One statistic "X"; consumes n words.
TestOutcome serial_over(WordSource& src, const TestParams& p);

}  // namespace prngbench

#endif  // PRNGBENCH_SERIAL_OVER_HPP_
