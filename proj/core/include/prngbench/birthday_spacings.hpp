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

#ifndef PRNGBENCH_BIRTHDAY_SPACINGS_HPP_
#define PRNGBENCH_BIRTHDAY_SPACINGS_HPP_

// Birthday spacings. n birthdays in [0, k), k = d^t, each built from t
// consecutive uniforms, are sorted; Y counts the spacings between neighbours
// that repeat an earlier spacing value. Y is approximately Poisson with mean
// n^3 / (4k).

#include <cstdint>
#include <span>

#include "prngbench/test_types.hpp"
#include "prngbench/word_source.hpp"

namespace prngbench {

// Sorts the birthdays, forms the n - 1 spacings, sorts them and counts
// entries equal to their predecessor. {0, 5, 10, 15} gives 2.
std::uint64_t count_duplicate_spacings(std::span<const std::uint64_t> birthdays);

double birthday_lambda(std::uint64_t n, std::uint64_t k) noexcept;

inline constexpr double kBirthdayMinLambda = 1.0;
inline constexpr double kBirthdayMaxLambda = 1e4;

// Requires n >= 2, k = d^t <= 2^63 and n^3 / (4k) in [1, 1e4].
void validate_birthday_spacings(const TestParams& p);

// One statistic "Y"; consumes n * t words.
TestOutcome birthday_spacings(WordSource& src, const TestParams& p);

}  // namespace prngbench

#endif  // PRNGBENCH_BIRTHDAY_SPACINGS_HPP_
