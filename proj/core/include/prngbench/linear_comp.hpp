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

#ifndef PRNGBENCH_LINEAR_COMP_HPP_
#define PRNGBENCH_LINEAR_COMP_HPP_

// Linear complexity profile. One bit per uniform feeds an incremental
// Berlekamp-Massey; every change of the complexity L is a jump.
//
//   Num   the jump count J, standardized with its exact mean and variance;
//         p = 1 - Phi(z), so too few jumps (linear structure) gives p near 1.
//   Size  chi-square of the jump sizes against the geometric law 2^-h,
//         sizes 1 .. K-1 and >= K, each cell expecting at least 5.
//
// Every single-bit sequence of a GF(2)-linear generator with an N-bit state
// stops gaining complexity at L = N, which J only shows once L_bits > 2N
// (39874 bits for MT19937).

#include <cstdint>
#include <span>
#include <vector>

#include "prngbench/test_types.hpp"
#include "prngbench/word_source.hpp"

namespace prngbench {

inline constexpr std::uint64_t kLinearCompMinBits = 64;
inline constexpr double kLinearCompMinExpected = 5.0;

struct JumpMoments {
  double mean = 0.0;
  double variance = 0.0;
};

// Exact mean and variance of the jump count for n fair coin bits, from a
// dynamic program over x = 2L - N. Cached per n.
JumpMoments jump_count_moments(std::uint64_t n);

struct ComplexityProfile {
  std::uint64_t complexity = 0;
  std::vector<std::uint64_t> jump_sizes;  // in order of occurrence
};

ComplexityProfile complexity_profile(std::span<const std::uint8_t> bits);

// Jump-size chi-square given the observed sizes; statistic 0 and p = 0.5 when
// fewer than two cells can be formed.
StatisticValue jump_size_statistic(std::span<const std::uint64_t> sizes);

// Requires L_bits >= 64.
void validate_linear_comp(const TestParams& p);

// Statistics "Num" (value J) and "Size"; consumes L_bits words.
TestOutcome linear_comp(WordSource& src, const TestParams& p);

}  // namespace prngbench

#endif  // PRNGBENCH_LINEAR_COMP_HPP_
