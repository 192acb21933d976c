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

#ifndef PRNGBENCH_RANDOM_WALK_HPP_
#define PRNGBENCH_RANDOM_WALK_HPP_

// Random walk statistics. Each walk takes one bit per uniform (1 -> +1,
// 0 -> -1) for l steps, S_0 = 0, S_i the position after step i. Per walk:
//
//   H  number of +1 steps
//   M  max over 0 <= i <= l of S_i
//   J  2 * #{k : S_(2k-1) > 0}, time spent on the positive side
//   R  #{1 <= i <= l : S_i = 0}, returns to the origin
//   C  #{3 <= i <= l : S_(i-2) S_i < 0}, sign changes
//
// The five empirical distributions over n walks are compared with exact
// laws by chi-square tests.

#include <cstdint>
#include <span>
#include <vector>

#include "prngbench/test_types.hpp"
#include "prngbench/word_source.hpp"

namespace prngbench {

struct WalkStatistics {
  std::uint64_t H = 0;
  std::uint64_t M = 0;
  std::uint64_t J = 0;
  std::uint64_t R = 0;
  std::uint64_t C = 0;

  friend bool operator==(const WalkStatistics&, const WalkStatistics&) = default;
};

// steps[i] != 0 means +1.
WalkStatistics walk_statistics(std::span<const std::uint8_t> steps);

// Probability vectors indexed by statistic value (size l + 1 each).
struct WalkDistributions {
  std::vector<double> H, M, J, R, C;
};

// Walks up to this length are enumerated; longer ones use closed forms.
inline constexpr std::uint64_t kWalkEnumerationMax = 20;

WalkDistributions enumerate_walk_distributions(std::uint64_t length);
WalkDistributions closed_form_walk_distributions(std::uint64_t length);

// Cached; exact for every even length >= 2.
const WalkDistributions& walk_distributions(std::uint64_t length);

// Chi-square cells are merged until each expects this many walks.
inline constexpr double kWalkMinExpected = 10.0;

// Requires an even walk_length >= 2 and enough walks (n) for every
// statistic to have at least two chi-square cells.
void validate_random_walk(const TestParams& p);

// Statistics "H", "M", "J", "R", "C"; consumes n * walk_length words.
TestOutcome random_walk(WordSource& src, const TestParams& p);

}  // namespace prngbench

#endif  // PRNGBENCH_RANDOM_WALK_HPP_
