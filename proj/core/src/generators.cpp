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

#include <algorithm>
#include <bit>
#include <cctype>
#include <string>

#include "prngbench/error.hpp"

namespace prngbench {

int state_bits(GeneratorKind kind) noexcept {
  switch (kind) {
    case GeneratorKind::Mt19937:
      return 19937;
    case GeneratorKind::Pcg32:
      return 64;
    case GeneratorKind::Philox4x32_10:
      return 192;
  }
  return 0;
}

std::string_view to_string(GeneratorKind kind) noexcept {
  switch (kind) {
    case GeneratorKind::Mt19937:
      return "mt19937";
    case GeneratorKind::Pcg32:
      return "pcg32";
    case GeneratorKind::Philox4x32_10:
      return "philox4x32_10";
  }
  return "unknown";
}

GeneratorKind parse_generator_kind(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "mt19937" || lower == "mt" || lower == "mt32") {
    return GeneratorKind::Mt19937;
  }
  if (lower == "pcg32" || lower == "pcg") return GeneratorKind::Pcg32;
  if (lower == "philox4x32_10" || lower == "philox4x32-10" || lower == "philox" ||
      lower == "philox32") {
    return GeneratorKind::Philox4x32_10;
  }
  throw ParameterError("unknown generator kind '" + std::string(name) + "'");
}

// ---------------------------------------------------------------- MT19937

namespace {

constexpr std::size_t kMtShift = 397;
constexpr std::uint32_t kMtMatrixA = 0x9908b0dfU;
constexpr std::uint32_t kMtUpperMask = 0x80000000U;
constexpr std::uint32_t kMtLowerMask = 0x7fffffffU;

inline std::uint32_t mt_mix(std::uint32_t upper, std::uint32_t lower,
                            std::uint32_t far) noexcept {
  const std::uint32_t y = (upper & kMtUpperMask) | (lower & kMtLowerMask);
  return far ^ (y >> 1) ^ ((y & 1U) ? kMtMatrixA : 0U);
}

void mt_twist(Mt19937State& s) noexcept {
  auto& mt = s.word_table;
  std::size_t kk = 0;
  for (; kk < kMtWords - kMtShift; ++kk) {
    mt[kk] = mt_mix(mt[kk], mt[kk + 1], mt[kk + kMtShift]);
  }
  for (; kk < kMtWords - 1; ++kk) {
    mt[kk] = mt_mix(mt[kk], mt[kk + 1], mt[kk + kMtShift - kMtWords]);
  }
  mt[kMtWords - 1] = mt_mix(mt[kMtWords - 1], mt[0], mt[kMtShift - 1]);
  s.index = 0;
}

}  // namespace

Mt19937State mt_seed(std::uint32_t seed) noexcept {
  Mt19937State s;
  s.word_table[0] = seed;
  for (std::uint32_t i = 1; i < kMtWords; ++i) {
    const std::uint32_t prev = s.word_table[i - 1];
    s.word_table[i] = 1812433253U * (prev ^ (prev >> 30)) + i;
  }
  s.index = kMtWords;
  return s;
}

std::uint32_t mt_next(Mt19937State& state) noexcept {
  if (state.index >= kMtWords) mt_twist(state);
  std::uint32_t y = state.word_table[state.index++];
  y ^= (y >> 11);
  y ^= (y << 7) & 0x9d2c5680U;
  y ^= (y << 15) & 0xefc60000U;
  y ^= (y >> 18);
  return y;
}

// ---------------------------------------------------------------- PCG32

std::uint32_t pcg32_next(Pcg32State& state) noexcept {
  const std::uint64_t old = state.state;
  state.state = old * kPcgMultiplier + state.increment;
  const auto xorshifted = static_cast<std::uint32_t>(((old >> 18U) ^ old) >> 27U);
  const auto rot = static_cast<int>(old >> 59U);
  return std::rotr(xorshifted, rot);
}

Pcg32State pcg32_seed(std::uint64_t initstate, std::uint64_t initseq) noexcept {
  Pcg32State s{0, (initseq << 1U) | 1U};
  pcg32_next(s);
  s.state += initstate;
  pcg32_next(s);
  return s;
}

Pcg32State pcg32_advance(Pcg32State state, std::uint64_t delta) noexcept {
  // Square-and-multiply on the affine map x -> a*x + c.
  std::uint64_t acc_mult = 1;
  std::uint64_t acc_plus = 0;
  std::uint64_t cur_mult = kPcgMultiplier;
  std::uint64_t cur_plus = state.increment;
  while (delta > 0) {
    if (delta & 1U) {
      acc_mult *= cur_mult;
      acc_plus = acc_plus * cur_mult + cur_plus;
    }
    cur_plus = (cur_mult + 1) * cur_plus;
    cur_mult *= cur_mult;
    delta >>= 1U;
  }
  state.state = acc_mult * state.state + acc_plus;
  return state;
}

// ---------------------------------------------------------------- Philox

namespace {

constexpr std::uint32_t kPhiloxM0 = 0xD2511F53U;
constexpr std::uint32_t kPhiloxM1 = 0xCD9E8D57U;
constexpr std::uint32_t kPhiloxW0 = 0x9E3779B9U;
constexpr std::uint32_t kPhiloxW1 = 0xBB67AE85U;

inline void philox_round(std::array<std::uint32_t, 4>& x, const PhiloxKey& k) noexcept {
  const std::uint64_t p0 = std::uint64_t{kPhiloxM0} * x[0];
  const std::uint64_t p1 = std::uint64_t{kPhiloxM1} * x[2];
  const auto hi0 = static_cast<std::uint32_t>(p0 >> 32);
  const auto lo0 = static_cast<std::uint32_t>(p0);
  const auto hi1 = static_cast<std::uint32_t>(p1 >> 32);
  const auto lo1 = static_cast<std::uint32_t>(p1);
  x = {hi1 ^ x[1] ^ k[0], lo1, hi0 ^ x[3] ^ k[1], lo0};
}

}  // namespace

std::array<std::uint32_t, 4> philox_block(const PhiloxCounter& counter,
                                          const PhiloxKey& key) noexcept {
  std::array<std::uint32_t, 4> x = counter;
  PhiloxKey k = key;
  philox_round(x, k);
  for (int r = 1; r < 10; ++r) {
    k[0] += kPhiloxW0;
    k[1] += kPhiloxW1;
    philox_round(x, k);
  }
  return x;
}

void philox_increment(PhiloxCounter& counter) noexcept {
  for (auto& w : counter) {
    if (++w != 0) return;
  }
}

void philox_add(PhiloxCounter& counter, std::uint64_t delta) noexcept {
  std::uint64_t carry = delta;
  for (auto& w : counter) {
    if (carry == 0) return;
    const std::uint64_t sum = std::uint64_t{w} + (carry & 0xffffffffU);
    w = static_cast<std::uint32_t>(sum);
    carry = (carry >> 32) + (sum >> 32);
  }
}

PhiloxState philox_seed(const PhiloxCounter& counter, const PhiloxKey& key) noexcept {
  PhiloxState s;
  s.counter = counter;
  s.key = key;
  s.block_pos = 4;
  return s;
}

std::uint32_t philox_next(PhiloxState& state) noexcept {
  if (state.block_pos >= 4) {
    state.block = philox_block(state.counter, state.key);
    philox_increment(state.counter);
    state.block_pos = 0;
  }
  return state.block[state.block_pos++];
}

// ---------------------------------------------------------------- unified

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

}  // namespace

GeneratorKind kind_of(const GeneratorState& state) noexcept {
  return std::visit(
      Overloaded{[](const Mt19937State&) { return GeneratorKind::Mt19937; },
                 [](const Pcg32State&) { return GeneratorKind::Pcg32; },
                 [](const PhiloxState&) { return GeneratorKind::Philox4x32_10; }},
      state);
}

std::uint32_t next_word(GeneratorState& state) noexcept {
  return std::visit(Overloaded{[](Mt19937State& s) { return mt_next(s); },
                               [](Pcg32State& s) { return pcg32_next(s); },
                               [](PhiloxState& s) { return philox_next(s); }},
                    state);
}

void fill_words(GeneratorState& state, std::span<std::uint32_t> out) noexcept {
  std::visit(
      Overloaded{[out](Mt19937State& s) {
                   for (auto& w : out) w = mt_next(s);
                 },
                 [out](Pcg32State& s) {
                   for (auto& w : out) w = pcg32_next(s);
                 },
                 [out](PhiloxState& s) {
                   for (auto& w : out) w = philox_next(s);
                 }},
      state);
}

void discard(GeneratorState& state, std::uint64_t n) noexcept {
  std::visit(Overloaded{[n](Mt19937State& s) {
                          for (std::uint64_t i = 0; i < n; ++i) mt_next(s);
                        },
                        [n](Pcg32State& s) { s = pcg32_advance(s, n); },
                        [n](PhiloxState& s) {
                          std::uint64_t left = n;
                          while (left > 0 && s.block_pos < 4) {
                            ++s.block_pos;
                            --left;
                          }
                          if (left == 0) return;
                          philox_add(s.counter, left / 4);
                          s.block_pos = 4;
                          for (std::uint64_t i = 0; i < left % 4; ++i) philox_next(s);
                        }},
             state);
}

GeneratorState stream_from_seed(GeneratorKind kind, std::uint64_t seed) noexcept {
  switch (kind) {
    case GeneratorKind::Mt19937:
      return mt_seed(static_cast<std::uint32_t>(seed));
    case GeneratorKind::Pcg32: {
      SplitMix64 expander(seed);
      const std::uint64_t initstate = expander.next();
      const std::uint64_t initseq = expander.next();
      return pcg32_seed(initstate, initseq);
    }
    case GeneratorKind::Philox4x32_10: {
      SplitMix64 expander(seed);
      const std::uint64_t k = expander.next();
      return philox_seed(PhiloxCounter{},
                         PhiloxKey{static_cast<std::uint32_t>(k),
                                   static_cast<std::uint32_t>(k >> 32)});
    }
  }
  return mt_seed(static_cast<std::uint32_t>(seed));
}

}  // namespace prngbench
