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

#ifndef PRNGBENCH_CLOSE_PAIRS_HPP_
#define PRNGBENCH_CLOSE_PAIRS_HPP_

// Close pairs on the unit torus. For n uniform points in [0,1)^t with
// minimum pairwise torus distance D,
//
//   x = n (n - 1) / 2 * V_t(D),   V_t(r) = pi^(t/2) / Gamma(t/2 + 1) r^t,
//
// is approximately exponential, so p = exp(-x). Points that are too close
// give p near 1.

#include <cstdint>
#include <span>

#include "prngbench/test_types.hpp"
#include "prngbench/word_source.hpp"

namespace prngbench {

inline constexpr int kClosePairsMinDim = 2;
inline constexpr int kClosePairsMaxDim = 9;

// Volume of the t-ball of radius r.
double ball_volume(int t, double r);

// Minimum torus distance among the points stored row-major in coords
// (coords.size() / t points). Uses a cell grid and falls back to all pairs
// when the grid cannot certify the answer.
double torus_min_distance(std::span<const double> coords, int t);

// Requires t in [2, 9] and n >= 2.
void validate_close_pairs(const TestParams& p);

// One statistic "D" (the minimum distance); consumes n * t words.
TestOutcome close_pairs(WordSource& src, const TestParams& p);

}  // namespace prngbench

#endif  // PRNGBENCH_CLOSE_PAIRS_HPP_
