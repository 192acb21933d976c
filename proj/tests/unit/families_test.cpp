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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "prngbench/battery.hpp"
#include "prngbench/birthday_spacings.hpp"
#include "prngbench/close_pairs.hpp"
#include "prngbench/collision_over.hpp"
#include "prngbench/error.hpp"
#include "prngbench/serial_over.hpp"
#include "prngbench/word_source.hpp"

namespace prngbench {
namespace {

// floor(u * d) for u the sliced word over 2^32, in long double.
std::uint32_t ref_cell(std::uint32_t w, int offset, int count, std::uint64_t d) {
  std::uint64_t v = (std::uint64_t{w} << offset) & 0xffffffffULL;
  if (count < 32) v = (v >> (32 - count)) << (32 - count);
  return static_cast<std::uint32_t>(
      std::floor(static_cast<long double>(v) / 4294967296.0L * static_cast<long double>(d)));
}

std::vector<std::uint32_t> random_words(std::size_t n, std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::vector<std::uint32_t> w(n);
  for (auto& x : w) x = rng();
  return w;
}

Classification verdict(const StatisticValue& s) {
  return classify(clamp_reported_p(s.p_value), ClassificationPolicy{});
}

// ---------------------------------------------------------------- SerialOver

TEST(SerialOver, CounterSequenceMatchesHandCount) {
  // u_i = (i mod 4) / 4 with d = 2: cells 0,0,1,1,... and the 16 circular
  // pairs fall four to each cell, so both psi2 terms vanish.
  std::vector<std::uint32_t> cells;
  for (int i = 0; i < 16; ++i) cells.push_back(ref_cell((i % 4) << 30, 0, 32, 2));
  EXPECT_EQ(serial_over_statistic(cells, 2, 2), 0.0);
  EXPECT_EQ(oracle::serial_over(cells, 2, 2), 0.0);
}

TEST(SerialOver, ConstantStreamIsExtreme) {
  FunctionSource zero([](std::uint64_t) { return 0U; });
  const auto out = serial_over(zero, TestParams{.n = 100, .t = 2, .d = 2});
  ASSERT_EQ(out.statistics.size(), 1U);
  EXPECT_EQ(out.statistics[0].name, "X");
  EXPECT_DOUBLE_EQ(out.statistics[0].value, 200.0);
  EXPECT_EQ(verdict(out.statistics[0]), Classification::ExtremeFail);
}

TEST(SerialOver, MatchesTupleEnumeration) {
  std::mt19937 rng(101);
  for (int trial = 0; trial < 40; ++trial) {
    const int t = 2 + static_cast<int>(rng() % 3);
    const std::uint64_t d = 2 + rng() % (t == 2 ? 9 : 4);
    const int offset = static_cast<int>(rng() % 8);
    const int count = std::min(32 - offset, 12 + static_cast<int>(rng() % 21));
    const std::uint64_t k = static_cast<std::uint64_t>(std::pow(d, t));
    const std::uint64_t n = 10 * k + rng() % 300;
    const auto words = random_words(n, 1000 + trial);
    std::vector<std::uint32_t> cells;
    for (auto w : words) cells.push_back(ref_cell(w, offset, count, d));

    VectorSource src(words);
    const TestParams p{.n = n, .t = t, .d = d, .bits = {offset, count}};
    const auto out = serial_over(src, p);
    const double expected = oracle::serial_over(cells, d, t);
    EXPECT_NEAR(out.statistics[0].value, expected, 1e-9 * std::max(1.0, expected))
        << "trial " << trial;
    EXPECT_EQ(out.samples_consumed, n);
    EXPECT_EQ(src.remaining(), 0U);
  }
}

TEST(SerialOver, Preconditions) {
  EXPECT_THROW(validate_serial_over({.n = 39, .t = 2, .d = 2}), ParameterError);
  EXPECT_NO_THROW(validate_serial_over({.n = 40, .t = 2, .d = 2}));
  EXPECT_THROW(validate_serial_over({.n = 1000, .t = 1, .d = 2}), ParameterError);
  EXPECT_THROW(validate_serial_over({.n = 1ULL << 40, .t = 2, .d = 1ULL << 15}),
               ParameterError);
  EXPECT_THROW(validate_serial_over({.n = 1ULL << 40, .t = 64, .d = 1ULL << 32}),
               ParameterError);
}

// ---------------------------------------------------------------- CollisionOver

TEST(CollisionOver, SameCellFiveTimes) {
  const std::vector<std::uint64_t> cells(5, 12345);
  EXPECT_EQ(count_collisions(cells), 4U);
}

TEST(CollisionOver, SingleThrowIsNotSuspicious) {
  FunctionSource src([](std::uint64_t i) { return static_cast<std::uint32_t>(i * 7919); });
  const auto out = collision_over(src, TestParams{.n = 1, .t = 2, .d = 256});
  EXPECT_EQ(out.statistics[0].value, 0.0);
  EXPECT_EQ(verdict(out.statistics[0]), Classification::Pass);
  EXPECT_EQ(out.samples_consumed, 1U);
}

TEST(CollisionOver, MatchesHashSetOccupancy) {
  std::mt19937 rng(202);
  for (int trial = 0; trial < 40; ++trial) {
    // Alternates between the bitmap (k <= 2^27) and the sorting counter.
    const int t = 2 + static_cast<int>(rng() % 2);
    const std::uint64_t d = trial % 2 == 0 ? 256 : (t == 2 ? 1ULL << 15 : 1ULL << 10);
    const std::uint64_t n = trial == 0 ? 64 : 2 + rng() % 1000;
    const int offset = static_cast<int>(rng() % 10);
    const auto words = random_words(n, 2000 + trial);
    // A few forced repeats so collisions actually occur.
    auto w = words;
    for (std::size_t i = 3; i < w.size(); i += 7) w[i] = w[i - 3];
    std::vector<std::uint32_t> cells;
    for (auto x : w) cells.push_back(ref_cell(x, offset, 32 - offset, d));

    VectorSource src(w);
    const auto out =
        collision_over(src, {.n = n, .t = t, .d = d, .bits = {offset, 32 - offset}});
    EXPECT_EQ(out.statistics[0].value, static_cast<double>(oracle::collisions(cells, t)))
        << "trial " << trial << " n=" << n << " t=" << t << " d=" << d << " off=" << offset;
    EXPECT_EQ(out.samples_consumed, n);
  }
}

TEST(CollisionOver, ExactOccupancyMean) {
  // n - k + k (1 - 1/k)^n at 60 digits (mpmath).
  const struct {
    std::uint64_t n, k;
    double mean;
  } cases[] = {
      {10, 100, 0.438207500880449001},
      {1000, 1ULL << 16, 7.5832230642204474},
      {1ULL << 20, 1ULL << 26, 8149.4917891414917736},
      {2, 1ULL << 40, 9.0949470177292823792e-13},
      {1ULL << 20, 1ULL << 40, 0.49999936421761503828},
  };
  for (const auto& c : cases) {
    EXPECT_NEAR(collision_mean(c.n, c.k) / c.mean, 1.0, 1e-10) << c.n << " " << c.k;
  }
}

TEST(CollisionOver, DenseRegimeRejected) {
  EXPECT_THROW(validate_collision_over({.n = 16384, .t = 2, .d = 256}), ParameterError);
  EXPECT_NO_THROW(validate_collision_over({.n = 16383, .t = 2, .d = 256}));
  EXPECT_THROW(validate_collision_over({.n = 0, .t = 2, .d = 256}), ParameterError);
}

// ---------------------------------------------------------------- BirthdaySpacings

TEST(BirthdaySpacings, HandExamples) {
  EXPECT_EQ(count_duplicate_spacings(std::vector<std::uint64_t>{0, 5, 10, 15}), 2U);
  EXPECT_EQ(count_duplicate_spacings(std::vector<std::uint64_t>{15, 0, 10, 5}), 2U);
  EXPECT_EQ(count_duplicate_spacings(std::vector<std::uint64_t>{3, 900}), 0U);
  EXPECT_EQ(count_duplicate_spacings(std::vector<std::uint64_t>{0, 1, 3, 6, 7}), 1U);
}

TEST(BirthdaySpacings, Lambda) {
  EXPECT_EQ(birthday_lambda(1024, 1ULL << 21), 128.0);
  EXPECT_EQ(birthday_lambda(1ULL << 16, 1ULL << 46), 1.0);
}

TEST(BirthdaySpacings, MatchesSpacingMultiset) {
  std::mt19937_64 rng(303);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 2 + rng() % 500;
    const std::uint64_t k = 1 + rng() % 5000;
    std::vector<std::uint64_t> days(n);
    for (auto& x : days) x = rng() % k;
    EXPECT_EQ(count_duplicate_spacings(days), oracle::duplicate_spacings(days)) << trial;
  }
}

TEST(BirthdaySpacings, BuildsBirthdaysFromTuples) {
  std::mt19937 rng(304);
  for (int trial = 0; trial < 20; ++trial) {
    const int t = 1 + static_cast<int>(rng() % 3);
    const std::uint64_t n = 256 + rng() % 256;
    // lambda = n^3 / (4 d^t) around 8.
    const auto d = static_cast<std::uint64_t>(
        std::pow(static_cast<double>(n) * n * n / 32.0, 1.0 / t));
    const std::uint64_t k = static_cast<std::uint64_t>(std::pow(d, t));
    const double lambda = static_cast<double>(n) * n * n / (4.0 * static_cast<double>(k));
    ASSERT_GE(lambda, 1.0);
    const auto words = random_words(n * t, 3000 + trial);
    std::vector<std::uint64_t> days;
    for (std::uint64_t i = 0; i < n; ++i) {
      std::uint64_t b = 0;
      for (int j = 0; j < t; ++j) b = b * d + ref_cell(words[i * t + j], 0, 32, d);
      days.push_back(b);
    }
    VectorSource src(words);
    const auto out = birthday_spacings(src, {.n = n, .t = t, .d = d});
    EXPECT_EQ(out.statistics[0].value, static_cast<double>(oracle::duplicate_spacings(days)));
    EXPECT_EQ(out.samples_consumed, n * t);
    EXPECT_EQ(src.remaining(), 0U);
  }
}

TEST(BirthdaySpacings, LambdaRange) {
  EXPECT_THROW(validate_birthday_spacings({.n = 1024, .t = 1, .d = 1ULL << 31}),
               ParameterError);  // lambda 0.125
  EXPECT_THROW(validate_birthday_spacings({.n = 1ULL << 16, .t = 1, .d = 1ULL << 20}),
               ParameterError);  // lambda 2^26
  EXPECT_NO_THROW(validate_birthday_spacings({.n = 1024, .t = 1, .d = 1ULL << 21}));
  EXPECT_THROW(validate_birthday_spacings({.n = 1ULL << 22, .t = 2, .d = 1ULL << 32}),
               ParameterError);  // k = 2^64
}

// ---------------------------------------------------------------- ClosePairs

TEST(ClosePairs, IdenticalPointsAreExtreme) {
  FunctionSource src([](std::uint64_t i) { return i % 2 == 0 ? 0x40000000U : 0x90000000U; });
  const auto out = close_pairs(src, {.n = 2, .t = 2});
  EXPECT_EQ(out.statistics[0].value, 0.0);
  EXPECT_EQ(out.statistics[0].p_value, 1.0);
  EXPECT_EQ(verdict(out.statistics[0]), Classification::ExtremeFail);
  EXPECT_EQ(out.samples_consumed, 4U);
}

TEST(ClosePairs, HandGeometry) {
  // Four corners of a half-period square: every neighbour at 1/2.
  const std::vector<double> square{0.0, 0.0, 0.5, 0.0, 0.0, 0.5, 0.5, 0.5};
  EXPECT_DOUBLE_EQ(torus_min_distance(square, 2), 0.5);
  // Wrap-around: 0.05 and 0.95 are 0.1 apart.
  const std::vector<double> wrap{0.05, 0.5, 0.95, 0.5, 0.5, 0.0};
  EXPECT_NEAR(torus_min_distance(wrap, 2), 0.1, 1e-15);
  const std::vector<double> diag{0.0, 0.0, 0.0, 0.9, 0.9, 0.9};
  EXPECT_NEAR(torus_min_distance(diag, 3), std::sqrt(0.03), 1e-15);
}

TEST(ClosePairs, BallVolume) {
  EXPECT_NEAR(ball_volume(2, 1.0), std::numbers::pi, 1e-14);
  EXPECT_NEAR(ball_volume(3, 2.0), 4.0 / 3.0 * std::numbers::pi * 8.0, 1e-12);
  EXPECT_NEAR(ball_volume(4, 1.0), std::numbers::pi * std::numbers::pi / 2.0, 1e-14);
}

TEST(ClosePairs, MatchesAllPairs) {
  std::mt19937_64 rng(404);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 40; ++trial) {
    const int t = 2 + trial % 8;
    const std::size_t n = trial < 30 ? 2 + rng() % 200 : 2000 + rng() % 1000;
    std::vector<double> coords(n * t);
    for (auto& c : coords) c = u(rng);
    if (trial % 5 == 1) {
      // Plant a near-duplicate across a cell boundary and the wrap.
      coords[0] = 0.999999;
      coords[t] = 0.000001;
      for (int k = 1; k < t; ++k) coords[t + k] = coords[k] + 1e-7;
    }
    EXPECT_NEAR(torus_min_distance(coords, t), oracle::min_torus_distance(coords, t), 1e-13)
        << "trial " << trial << " n=" << n << " t=" << t;
  }
}

TEST(ClosePairs, StreamMatchesAllPairs) {
  const auto words = random_words(200, 405);
  std::vector<double> coords;
  for (auto w : words) coords.push_back(static_cast<double>(w) / 4294967296.0);
  VectorSource src(words);
  const auto out = close_pairs(src, {.n = 100, .t = 2});
  const double dmin = oracle::min_torus_distance(coords, 2);
  EXPECT_NEAR(out.statistics[0].value, dmin, 1e-15);
  EXPECT_NEAR(out.statistics[0].p_value, std::exp(-4950.0 * std::numbers::pi * dmin * dmin),
              1e-12);
}

TEST(ClosePairs, DimensionRange) {
  EXPECT_THROW(validate_close_pairs({.n = 10, .t = 1}), ParameterError);
  EXPECT_THROW(validate_close_pairs({.n = 10, .t = 10}), ParameterError);
  EXPECT_THROW(validate_close_pairs({.n = 1, .t = 2}), ParameterError);
  EXPECT_NO_THROW(validate_close_pairs({.n = 2, .t = 9}));
}

}  // namespace
}  // namespace prngbench
