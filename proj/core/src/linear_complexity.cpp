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

#include <algorithm>
#include <bit>

#include "prngbench/error.hpp"

namespace prngbench {
namespace {

constexpr std::uint64_t kWordBits = 64;

std::size_t words_for(std::uint64_t bits) {
  return static_cast<std::size_t>((bits + kWordBits - 1) / kWordBits);
}

}  // namespace

LinearComplexityTracker::LinearComplexityTracker(std::uint64_t capacity)
    : capacity_(capacity),
      sequence_(words_for(capacity) + 1, 0),
      connection_(words_for(capacity + 1) + 1, 0),
      previous_(words_for(capacity + 1) + 1, 0),
      scratch_(words_for(capacity + 1) + 1, 0) {
  if (capacity == 0) throw DomainError("linear complexity capacity must be positive");
  connection_[0] = 1;
  previous_[0] = 1;
}

bool LinearComplexityTracker::sequence_bit(std::uint64_t pos) const noexcept {
  return (sequence_[pos / kWordBits] >> (pos % kWordBits)) & 1U;
}

// 64 stored bits starting at bitpos (bits past the array read as zero).
LinearComplexityTracker::Word LinearComplexityTracker::sequence_window(
    std::uint64_t bitpos) const noexcept {
  const std::size_t w = bitpos / kWordBits;
  const unsigned off = bitpos % kWordBits;
  Word lo = w < sequence_.size() ? sequence_[w] : 0;
  if (off == 0) return lo;
  Word hi = w + 1 < sequence_.size() ? sequence_[w + 1] : 0;
  return (lo >> off) | (hi << (kWordBits - off));
}

std::uint64_t LinearComplexityTracker::push(bool bit) {
  if (seen_ >= capacity_) throw DomainError("linear complexity tracker is full");
  const std::uint64_t n = seen_;
  const std::uint64_t base = capacity_ - 1 - n;
  if (bit) sequence_[base / kWordBits] |= Word{1} << (base % kWordBits);

  // d = sum_{i=0}^{L} c_i s_{n-i}; s_{n-i} is at base + i.
  Word acc = 0;
  const std::size_t cwords = words_for(length_ + 1);
  for (std::size_t j = 0; j < cwords; ++j) {
    acc ^= connection_[j] & sequence_window(base + j * kWordBits);
  }
  // Coefficients above L are zero, so no masking is needed.
  const bool discrepancy = std::popcount(acc) & 1;
  ++seen_;

  if (!discrepancy) {
    ++shift_;
    return 0;
  }

  const bool grows = 2 * length_ <= n;
  if (grows) scratch_ = connection_;

  // C(x) += x^shift B(x)
  const std::size_t wshift = shift_ / kWordBits;
  const unsigned bshift = shift_ % kWordBits;
  const std::size_t limit = std::min(connection_.size(), words_for(n + 2) + 1);
  for (std::size_t j = limit; j-- > wshift;) {
    const std::size_t src = j - wshift;
    Word v = previous_[src] << bshift;
    if (bshift != 0 && src > 0) v |= previous_[src - 1] >> (kWordBits - bshift);
    connection_[j] ^= v;
  }

  if (!grows) {
    ++shift_;
    return 0;
  }
  const std::uint64_t old_length = length_;
  length_ = n + 1 - length_;
  previous_.swap(scratch_);
  shift_ = 1;
  return length_ - old_length;
}

std::uint64_t berlekamp_massey(std::span<const std::uint8_t> bits) {
  if (bits.empty()) throw DomainError("Berlekamp-Massey needs at least one bit");
  LinearComplexityTracker tracker(bits.size());
  for (std::uint8_t b : bits) tracker.push(b != 0);
  return tracker.complexity();
}

}  // namespace prngbench
