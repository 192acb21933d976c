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

#ifndef PRNGBENCH_LINEAR_COMPLEXITY_HPP_
#define PRNGBENCH_LINEAR_COMPLEXITY_HPP_

#include <cstdint>
#include <span>
#include <vector>

namespace prngbench {

// Incremental Berlekamp-Massey over GF(2) with bit-packed polynomials.
// Capacity is fixed at construction; push() costs O(L / 64).
class LinearComplexityTracker {
 public:
  explicit LinearComplexityTracker(std::uint64_t capacity);

  // Feeds one bit. Returns the size of the complexity jump it caused, 0 if
  // the complexity did not change.
  std::uint64_t push(bool bit);

  std::uint64_t complexity() const noexcept { return length_; }
  std::uint64_t bits_seen() const noexcept { return seen_; }
  std::uint64_t capacity() const noexcept { return capacity_; }

 private:
  using Word = std::uint64_t;

  bool sequence_bit(std::uint64_t pos) const noexcept;
  Word sequence_window(std::uint64_t bitpos) const noexcept;

  std::uint64_t capacity_;
  std::uint64_t length_ = 0;
  std::uint64_t seen_ = 0;
  std::uint64_t shift_ = 1;  // steps since the last length change
  // Bits stored back to front: s_N sits at position capacity_ - 1 - N, so
  // coefficient i of the connection polynomial lines up with s_{N-i}.
  std::vector<Word> sequence_;
  std::vector<Word> connection_;  // C(x), coefficient 0 is always 1
  std::vector<Word> previous_;    // B(x)
  std::vector<Word> scratch_;
};

// Linear complexity of a whole sequence (one bit per element, nonzero = 1).
// Throws DomainError on an empty sequence.
std::uint64_t berlekamp_massey(std::span<const std::uint8_t> bits);

}  // namespace prngbench

#endif  // PRNGBENCH_LINEAR_COMPLEXITY_HPP_
