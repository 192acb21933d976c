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

#ifndef PRNGBENCH_GENERATORS_HPP_
#define PRNGBENCH_GENERATORS_HPP_

// Bit-exact MT19937, PCG32 (XSH-RR 64/32) and Philox4x32-10.
//
// States are plain values. Step functions mutate the state they are given and
// must not be called concurrently on one instance; copying a state forks an
// independent replay of the same sequence.

#include <array>
#include <cstdint>
#include <span>
#include <string_view>
#include <variant>

namespace prngbench {

enum class GeneratorKind : std::uint8_t {
  Mt19937 = 1,
  Pcg32 = 2,
  Philox4x32_10 = 3,
};

// Internal state size in bits: 19937, 64 and 192 (counter + key).
int state_bits(GeneratorKind kind) noexcept;

// Canonical lower-case name: "mt19937", "pcg32", "philox4x32_10".
std::string_view to_string(GeneratorKind kind) noexcept;

// Accepts the canonical names plus the short aliases "mt", "pcg", "philox"
// (case-insensitive). Throws ParameterError on anything else.
GeneratorKind parse_generator_kind(std::string_view name);

// ---------------------------------------------------------------- MT19937

inline constexpr std::size_t kMtWords = 624;

struct Mt19937State {
  std::array<std::uint32_t, kMtWords> word_table{};
  std::uint32_t index = kMtWords;  // in [0, 624]; 624 forces a twist

  friend bool operator==(const Mt19937State&, const Mt19937State&) = default;
};

// init_genrand from the 2002 reference code (scalar seeding).
Mt19937State mt_seed(std::uint32_t seed) noexcept;
std::uint32_t mt_next(Mt19937State& state) noexcept;

// ---------------------------------------------------------------- PCG32

inline constexpr std::uint64_t kPcgMultiplier = 6364136223846793005ULL;

struct Pcg32State {
  std::uint64_t state = 0;
  std::uint64_t increment = 1;  // always odd

  friend bool operator==(const Pcg32State&, const Pcg32State&) = default;
};

// pcg32_srandom_r: increment = (initseq << 1) | 1, two LCG steps around the
// addition of initstate.
Pcg32State pcg32_seed(std::uint64_t initstate, std::uint64_t initseq) noexcept;
std::uint32_t pcg32_next(Pcg32State& state) noexcept;

// Jumps the LCG ahead by delta steps in O(log delta).
Pcg32State pcg32_advance(Pcg32State state, std::uint64_t delta) noexcept;

// ---------------------------------------------------------------- Philox

using PhiloxCounter = std::array<std::uint32_t, 4>;  // little-endian words
using PhiloxKey = std::array<std::uint32_t, 2>;

struct PhiloxState {
  PhiloxCounter counter{};
  PhiloxKey key{};
  std::array<std::uint32_t, 4> block{};
  // When block_pos < 4, block = philox_block(counter - 1, key).
  std::uint32_t block_pos = 4;

  friend bool operator==(const PhiloxState&, const PhiloxState&) = default;
};

// The ten-round Philox4x32 bijection.
std::array<std::uint32_t, 4> philox_block(const PhiloxCounter& counter,
                                          const PhiloxKey& key) noexcept;

// 128-bit increment with full carry propagation (wraps at 2^128).
void philox_increment(PhiloxCounter& counter) noexcept;

// Advances a counter by an arbitrary 64-bit amount with carry.
void philox_add(PhiloxCounter& counter, std::uint64_t delta) noexcept;

PhiloxState philox_seed(const PhiloxCounter& counter, const PhiloxKey& key) noexcept;
std::uint32_t philox_next(PhiloxState& state) noexcept;

// ---------------------------------------------------------------- unified

using GeneratorState = std::variant<Mt19937State, Pcg32State, PhiloxState>;

GeneratorKind kind_of(const GeneratorState& state) noexcept;

std::uint32_t next_word(GeneratorState& state) noexcept;
void fill_words(GeneratorState& state, std::span<std::uint32_t> out) noexcept;

// Skips n words: O(log n) for PCG32, O(1) for Philox, O(n) for MT19937.
void discard(GeneratorState& state, std::uint64_t n) noexcept;

// Vigna's splitmix64, used to expand one 64-bit seed into several words.
class SplitMix64 {
 public:
  explicit constexpr SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  constexpr std::uint64_t next() noexcept {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

// Single-seed initialization used by the campaign harness.
//   Mt19937: mt_seed(seed mod 2^32)
//   Pcg32:   pcg32_seed(s1, s2) with s1, s2 the first two splitmix64 outputs
//   Philox:  key = (low, high) 32-bit halves of s1, counter = 0
GeneratorState stream_from_seed(GeneratorKind kind, std::uint64_t seed) noexcept;

// word / 2^32, exact in binary64, always in [0, 1).
constexpr double to_unit_interval(std::uint32_t word) noexcept {
  return static_cast<double>(word) * 0x1.0p-32;
}

}  // namespace prngbench

#endif  // PRNGBENCH_GENERATORS_HPP_
