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

#ifndef PRNGBENCH_TEST_ID_HPP_
#define PRNGBENCH_TEST_ID_HPP_

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace prngbench {

enum class TestFamily : std::uint8_t {
  SerialOver,
  CollisionOver,
  BirthdaySpacings,
  ClosePairs,
  RandomWalk,
  LinearComp,
  // Results imported from an external battery run (BigCrush summaries).
  External,
};

std::string_view to_string(TestFamily family) noexcept;
TestFamily parse_test_family(std::string_view name);

// Identifies one reported statistic. Identity is (family, variant_index,
// statistic); bigcrush_indices only documents the closest BigCrush test
// numbers, which drift between TestU01 versions.
struct TestId {
  TestFamily family = TestFamily::SerialOver;
  int variant_index = 0;
  std::string statistic;
  std::vector<int> bigcrush_indices;

  // "LinearComp[1].Num"
  std::string label() const;

  friend bool operator==(const TestId& a, const TestId& b) noexcept {
    return a.family == b.family && a.variant_index == b.variant_index &&
           a.statistic == b.statistic;
  }
  friend std::strong_ordering operator<=>(const TestId& a, const TestId& b) noexcept {
    if (auto c = a.family <=> b.family; c != 0) return c;
    if (auto c = a.variant_index <=> b.variant_index; c != 0) return c;
    return a.statistic.compare(b.statistic) <=> 0;
  }
};

}  // namespace prngbench

#endif  // PRNGBENCH_TEST_ID_HPP_
