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

#ifndef PRNGBENCH_STATE_IO_HPP_
#define PRNGBENCH_STATE_IO_HPP_

// Versioned byte-exact generator state snapshots.
//
//   byte 0     kind tag (1 = mt19937, 2 = pcg32, 3 = philox4x32_10)
//   byte 1     format version (currently 1)
//   bytes 2..  fields in declaration order, little-endian
//              mt19937: 624 x u32 word_table, u32 index          (2502 bytes)
//              pcg32:   u64 state, u64 increment                 (18 bytes)
//              philox:  4 x u32 counter, 2 x u32 key,
//                       4 x u32 block, u32 block_pos             (46 bytes)

#include <cstdint>
#include <span>
#include <vector>

#include "prngbench/generators.hpp"

namespace prngbench {

inline constexpr std::uint8_t kStateFormatVersion = 1;

std::vector<std::uint8_t> serialize_state(const GeneratorState& state);

// Throws FormatError on a malformed buffer and SchemaVersionError on an
// unknown version byte.
GeneratorState deserialize_state(std::span<const std::uint8_t> bytes);

}  // namespace prngbench

#endif  // PRNGBENCH_STATE_IO_HPP_
