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

#include "prngbench/linear_complexity.hpp"

#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "prngbench/error.hpp"

namespace prngbench {
namespace {

TEST(BerlekampMassey, AllZero) {
  EXPECT_EQ(berlekamp_massey(std::vector<std::uint8_t>(100, 0)), 0U);
}

TEST(BerlekampMassey, EmptyThrows) {
  EXPECT_THROW(berlekamp_massey(std::vector<std::uint8_t>{}), DomainError);
}

TEST(BerlekampMassey, AlternatingMatchesExhaustiveSearch) {
  std::vector<std::uint8_t> s;
  for (int i = 0; i < 10; ++i) s.push_back(i % 2 == 0);
  const auto expected = oracle::exhaustive_linear_complexity(s);
  EXPECT_EQ(berlekamp_massey(s), expected);
  EXPECT_EQ(expected, 2U);
}

TEST(BerlekampMassey, EightBitLfsr) {
  // x^8 + x^6 + x^5 + x^4 + 1, a primitive trinomial-free tap set.
  std::vector<std::uint8_t> s{1, 0, 0, 1, 0, 1, 1, 0};
  while (s.size() < 64) {
    const std::size_t i = s.size();
    s.push_back(s[i - 8] ^ s[i - 6] ^ s[i - 5] ^ s[i - 4]);
  }
  EXPECT_EQ(berlekamp_massey(s), 8U);
  EXPECT_EQ(oracle::bm_profile(s).back(), 8U);
}

TEST(BerlekampMassey, ExhaustiveOnShortRandomSequences) {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng() % 14;
    std::vector<std::uint8_t> s(n);
    for (auto& b : s) b = rng() & 1U;
    ASSERT_EQ(berlekamp_massey(s), oracle::exhaustive_linear_complexity(s)) << trial;
  }
}

TEST(BerlekampMassey, ProfileMatchesTextbookImplementation) {
  std::mt19937 rng(23);
  for (std::size_t n : {1U, 63U, 64U, 65U, 127U, 128U, 129U, 700U, 3000U}) {
    std::vector<std::uint8_t> s(n);
    for (auto& b : s) b = rng() & 1U;
    const auto ref = oracle::bm_profile(s);
    LinearComplexityTracker t(n);
    for (std::size_t i = 0; i < n; ++i) {
      t.push(s[i]);
      ASSERT_EQ(t.complexity(), ref[i]) << n << " at " << i;
    }
  }
}

TEST(BerlekampMassey, RecoversLfsrLengths) {
  std::mt19937 rng(29);
  for (std::size_t len : {1U, 5U, 31U, 64U, 65U, 100U, 200U}) {
    std::vector<std::uint8_t> taps(len);
    for (auto& t : taps) t = rng() & 1U;
    taps[len - 1] = 1;  // nonsingular
    std::vector<std::uint8_t> s;
    s.push_back(1);
    while (s.size() < len) s.push_back(rng() & 1U);
    while (s.size() < 4 * len + 10) {
      const std::size_t i = s.size();
      std::uint8_t v = 0;
      for (std::size_t j = 1; j <= len; ++j) v ^= taps[j - 1] & s[i - j];
      s.push_back(v);
    }
    const auto got = berlekamp_massey(s);
    EXPECT_LE(got, len);
    EXPECT_EQ(got, oracle::bm_profile(s).back());
  }
}

TEST(BerlekampMassey, RandomSequenceNearHalf) {
  std::mt19937 rng(31);
  for (std::size_t n : {1000U, 5000U, 20000U}) {
    std::vector<std::uint8_t> s(n);
    for (auto& b : s) b = rng() & 1U;
    const auto l = static_cast<double>(berlekamp_massey(s));
    EXPECT_NEAR(l, n / 2.0, 12.0) << n;
  }
}

TEST(LinearComplexityTracker, JumpSizesSumToComplexity) {
  std::mt19937 rng(37);
  LinearComplexityTracker t(5000);
  std::uint64_t total = 0;
  for (int i = 0; i < 5000; ++i) total += t.push(rng() & 1U);
  EXPECT_EQ(total, t.complexity());
  EXPECT_THROW(t.push(true), DomainError);
}

}  // namespace
}  // namespace prngbench
