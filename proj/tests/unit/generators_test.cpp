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

#include "prngbench/generators.hpp"

#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "prngbench/error.hpp"

namespace prngbench {
namespace {

std::vector<std::uint32_t> take(GeneratorState s, std::size_t n) {
  std::vector<std::uint32_t> out(n);
  fill_words(s, out);
  return out;
}

TEST(Mt19937, SeedRecurrence) {
  const Mt19937State s = mt_seed(5489);
  EXPECT_EQ(s.word_table[0], 5489U);
  EXPECT_EQ(s.index, 624U);
  const Mt19937State z = mt_seed(0);
  EXPECT_EQ(z.word_table[0], 0U);
  EXPECT_EQ(z.word_table[1], 1U);
}

TEST(Mt19937, ReferenceOutputs) {
  Mt19937State s = mt_seed(5489);
  EXPECT_EQ(mt_next(s), 3499211612U);
  EXPECT_EQ(mt_next(s), 581869302U);
  EXPECT_EQ(mt_next(s), 3890346734U);
}

TEST(Mt19937, MatchesStdMt19937AtTenThousand) {
  Mt19937State s = mt_seed(5489);
  std::uint32_t w = 0;
  for (int i = 0; i < 10000; ++i) w = mt_next(s);
  EXPECT_EQ(w, 4123659995U);
}

TEST(Mt19937, MatchesStdMt19937ForOtherSeeds) {
  for (std::uint32_t seed : {0U, 1U, 42U, 0xffffffffU}) {
    std::mt19937 ref(seed);
    Mt19937State s = mt_seed(seed);
    for (int i = 0; i < 2000; ++i) ASSERT_EQ(mt_next(s), ref()) << seed << " " << i;
  }
}

TEST(Pcg32, ReferenceOutputs) {
  Pcg32State s = pcg32_seed(42, 54);
  const std::uint32_t expected[] = {0xa15c02b7, 0x7b47f409, 0xba1d3330,
                                    0x83d2f293, 0xbfa4784b, 0xcbed606e};
  for (std::uint32_t e : expected) EXPECT_EQ(pcg32_next(s), e);
}

TEST(Pcg32, IncrementAlwaysOdd) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 1000; ++i) EXPECT_EQ(pcg32_seed(rng(), rng()).increment & 1U, 1U);
}

TEST(Pcg32, AdvanceMatchesSequentialSteps) {
  std::mt19937_64 rng(11);
  std::vector<std::uint64_t> deltas{0, 1, 2, 17, 1000, 1U << 16};
  for (int i = 0; i < 8; ++i) deltas.push_back(rng() % 20000);
  for (std::uint64_t delta : deltas) {
    Pcg32State seq = pcg32_seed(rng(), rng());
    const Pcg32State jumped = pcg32_advance(seq, delta);
    for (std::uint64_t k = 0; k < delta; ++k) pcg32_next(seq);
    EXPECT_EQ(jumped, seq) << delta;
  }
}

TEST(Pcg32, AdvanceThenNextEqualsSequentialNexts) {
  Pcg32State a = pcg32_seed(42, 54);
  Pcg32State b = pcg32_advance(a, 10000);
  std::uint32_t last = 0;
  for (int i = 0; i <= 10000; ++i) last = pcg32_next(a);
  EXPECT_EQ(pcg32_next(b), last);
}

TEST(Pcg32, AdvanceByPeriodIsIdentity) {
  const Pcg32State s = pcg32_seed(3, 4);
  // 2^64 = (2^63) twice.
  const Pcg32State t = pcg32_advance(pcg32_advance(s, 1ULL << 63), 1ULL << 63);
  EXPECT_EQ(s, t);
}

TEST(Philox, ZeroBlockKnownAnswer) {
  const auto out = philox_block({0, 0, 0, 0}, {0, 0});
  EXPECT_EQ(out, (std::array<std::uint32_t, 4>{0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8}));
}

TEST(Philox, AllOnesKnownAnswer) {
  const auto out = philox_block({0xffffffff, 0xffffffff, 0xffffffff, 0xffffffff},
                                {0xffffffff, 0xffffffff});
  EXPECT_EQ(out, (std::array<std::uint32_t, 4>{0x408f276d, 0x41c83b0e, 0xa20bc7c6, 0x6d5451fd}));
}

TEST(Philox, PiDigitsKnownAnswer) {
  const auto out = philox_block({0x243f6a88, 0x85a308d3, 0x13198a2e, 0x03707344},
                                {0xa4093822, 0x299f31d0});
  EXPECT_EQ(out, (std::array<std::uint32_t, 4>{0xd16cfe09, 0x94fdcceb, 0x5001e420, 0x24126ea1}));
}

TEST(Philox, BlockIsPure) {
  const PhiloxCounter c{1, 2, 3, 4};
  const PhiloxKey k{5, 6};
  EXPECT_EQ(philox_block(c, k), philox_block(c, k));
  EXPECT_EQ(c, (PhiloxCounter{1, 2, 3, 4}));
}

TEST(Philox, FirstFourOutputsAreTheZeroBlock) {
  PhiloxState s = philox_seed({}, {});
  const auto block = philox_block({}, {});
  for (int i = 0; i < 4; ++i) EXPECT_EQ(philox_next(s), block[i]);
  EXPECT_EQ(s.counter, (PhiloxCounter{1, 0, 0, 0}));
}

TEST(Philox, CounterCarry) {
  PhiloxCounter c{0xffffffff, 0, 0, 0};
  philox_increment(c);
  EXPECT_EQ(c, (PhiloxCounter{0, 1, 0, 0}));
  PhiloxCounter full{0xffffffff, 0xffffffff, 0xffffffff, 0xffffffff};
  philox_increment(full);
  EXPECT_EQ(full, (PhiloxCounter{0, 0, 0, 0}));
  PhiloxCounter a{0xfffffffe, 0xffffffff, 7, 0};
  philox_add(a, 3);
  EXPECT_EQ(a, (PhiloxCounter{1, 0, 8, 0}));
  PhiloxCounter b{1, 0, 0, 0};
  philox_add(b, 0xffffffffffffffffULL);
  EXPECT_EQ(b, (PhiloxCounter{0, 0, 1, 0}));
}

TEST(Philox, RandomAccessEqualsSequential) {
  const PhiloxKey key{0xdeadbeef, 0x12345678};
  PhiloxState s = philox_seed({}, key);
  for (std::uint32_t c = 0; c < 10000; ++c) {
    const auto block = philox_block({c, 0, 0, 0}, key);
    for (int i = 0; i < 4; ++i) ASSERT_EQ(philox_next(s), block[i]) << c;
  }
}

TEST(Generators, ReplayFromCopiedState) {
  for (auto kind : {GeneratorKind::Mt19937, GeneratorKind::Pcg32, GeneratorKind::Philox4x32_10}) {
    GeneratorState a = stream_from_seed(kind, 99);
    for (int i = 0; i < 123; ++i) next_word(a);
    GeneratorState b = a;
    std::vector<std::uint32_t> wa(1'000'000), wb(1'000'000);
    fill_words(a, wa);
    fill_words(b, wb);
    EXPECT_EQ(wa, wb);
    EXPECT_EQ(a, b);
  }
}

TEST(Generators, FillMatchesNextWord) {
  for (auto kind : {GeneratorKind::Mt19937, GeneratorKind::Pcg32, GeneratorKind::Philox4x32_10}) {
    GeneratorState a = stream_from_seed(kind, 5);
    GeneratorState b = a;
    const auto bulk = take(a, 1500);
    for (std::size_t i = 0; i < bulk.size(); ++i) ASSERT_EQ(next_word(b), bulk[i]);
  }
}

TEST(Generators, DiscardMatchesStepping) {
  for (auto kind : {GeneratorKind::Mt19937, GeneratorKind::Pcg32, GeneratorKind::Philox4x32_10}) {
    for (std::uint64_t skip : {0ULL, 1ULL, 3ULL, 4ULL, 5ULL, 625ULL, 9999ULL}) {
      GeneratorState a = stream_from_seed(kind, 1234);
      next_word(a);  // start mid-block
      GeneratorState b = a;
      discard(a, skip);
      for (std::uint64_t i = 0; i < skip; ++i) next_word(b);
      EXPECT_EQ(take(a, 8), take(b, 8)) << to_string(kind) << " " << skip;
    }
  }
}

TEST(StreamFromSeed, MtIsPlainSeeding) {
  EXPECT_EQ(take(stream_from_seed(GeneratorKind::Mt19937, 5489), 100),
            take(mt_seed(5489), 100));
  EXPECT_EQ(take(stream_from_seed(GeneratorKind::Mt19937, 0x100001571ULL), 10),
            take(mt_seed(0x1571), 10));
}

TEST(StreamFromSeed, SplitMixExpansion) {
  SplitMix64 sm(77);
  const std::uint64_t s1 = sm.next();
  const std::uint64_t s2 = sm.next();
  EXPECT_EQ(std::get<Pcg32State>(stream_from_seed(GeneratorKind::Pcg32, 77)), pcg32_seed(s1, s2));
  const auto ph = std::get<PhiloxState>(stream_from_seed(GeneratorKind::Philox4x32_10, 77));
  EXPECT_EQ(ph.key, (PhiloxKey{static_cast<std::uint32_t>(s1), static_cast<std::uint32_t>(s1 >> 32)}));
  EXPECT_EQ(ph.counter, PhiloxCounter{});
}

TEST(StreamFromSeed, SplitMixReferenceValue) {
  // First output of splitmix64 seeded with 0 (reference C implementation).
  SplitMix64 sm(0);
  EXPECT_EQ(sm.next(), 0xe220a8397b1dcdafULL);
}

TEST(StreamFromSeed, Deterministic) {
  for (auto kind : {GeneratorKind::Mt19937, GeneratorKind::Pcg32, GeneratorKind::Philox4x32_10}) {
    EXPECT_EQ(take(stream_from_seed(kind, 31337), 1000), take(stream_from_seed(kind, 31337), 1000));
  }
}

TEST(StreamFromSeed, DistinctSeedsGiveDistinctStreams) {
  for (auto kind : {GeneratorKind::Pcg32, GeneratorKind::Philox4x32_10, GeneratorKind::Mt19937}) {
    EXPECT_NE(take(stream_from_seed(kind, 1), 10000), take(stream_from_seed(kind, 2), 10000));
  }
}

TEST(UnitInterval, ExactValues) {
  EXPECT_EQ(to_unit_interval(0), 0.0);
  EXPECT_EQ(to_unit_interval(0x80000000U), 0.5);
  EXPECT_EQ(to_unit_interval(0xffffffffU), 0.9999999997671693563461304);
  EXPECT_LT(to_unit_interval(0xffffffffU), 1.0);
}

TEST(UnitInterval, Monotone) {
  std::mt19937 rng(3);
  for (int i = 0; i < 100000; ++i) {
    const std::uint32_t a = rng();
    const std::uint32_t b = rng();
    EXPECT_EQ(a <= b, to_unit_interval(a) <= to_unit_interval(b));
  }
}

TEST(GeneratorKind, NamesAndStateBits) {
  EXPECT_EQ(state_bits(GeneratorKind::Mt19937), 19937);
  EXPECT_EQ(state_bits(GeneratorKind::Pcg32), 64);
  EXPECT_EQ(state_bits(GeneratorKind::Philox4x32_10), 192);
  for (auto kind : {GeneratorKind::Mt19937, GeneratorKind::Pcg32, GeneratorKind::Philox4x32_10}) {
    EXPECT_EQ(parse_generator_kind(to_string(kind)), kind);
  }
  EXPECT_EQ(parse_generator_kind("PCG"), GeneratorKind::Pcg32);
  EXPECT_EQ(parse_generator_kind("philox"), GeneratorKind::Philox4x32_10);
  EXPECT_THROW(parse_generator_kind("xoroshiro"), ParameterError);
}

}  // namespace
}  // namespace prngbench
