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

#ifndef PRNGBENCH_COLLISION_OVER_HPP_
#define PRNGBENCH_COLLISION_OVER_HPP_

// Overlapping collision test. The n circular overlapping t-tuples of n
// uniforms are thrown into k = d^t cells; C counts throws that land in an
// already occupied cell. In the sparse regime C is close to Poisson with the
// exact occupancy mean n - k + k (1 - 1/k)^n.

#include <cstdint>
#include <span>

#include "prngbench/test_types.hpp"
#include "prngbench/word_source.hpp"

namespace prngbench {

// n minus the number of distinct values.
std::uint64_t count_collisions(std::span<const std::uint64_t> cells);

// Expected collisions for n uniform throws into k cells.
double collision_mean(std::uint64_t n, std::uint64_t k);

// Requires n >= 1, d^t < 2^64 and n < k / 4.
void validate_collision_over(const TestParams& p);

// One statistic "C"; consumes n words. With n = 1 the mean is zero and the
// result is C = 0 with p = 0.5.
TestOutcome collision_over(WordSource& src, const TestParams& p);

}  // namespace prngbench

#endif  // PRNGBENCH_COLLISION_OVER_HPP_
