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

#include "prngbench/state_io.hpp"

#include <string>

#include "prngbench/error.hpp"

namespace prngbench {
namespace {

class ByteWriter {
 public:
  void u8(std::uint8_t v) { out_.push_back(v); }
  void u32(std::uint32_t v) {
    for (int i = 0; i < 4; ++i) out_.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
  }
  void u64(std::uint64_t v) {
    for (int i = 0; i < 8; ++i) out_.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
  }
  std::vector<std::uint8_t> take() { return std::move(out_); }

 private:
  std::vector<std::uint8_t> out_;
};

class ByteReader {
 public:
  explicit ByteReader(std::span<const std::uint8_t> in) : in_(in) {}

  std::uint32_t u32() {
    need(4);
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v |= std::uint32_t{in_[pos_++]} << (8 * i);
    return v;
  }
  std::uint64_t u64() {
    need(8);
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= std::uint64_t{in_[pos_++]} << (8 * i);
    return v;
  }
  void expect_end() const {
    if (pos_ != in_.size()) {
      throw FormatError("state snapshot has " + std::to_string(in_.size() - pos_) +
                        " trailing bytes");
    }
  }

 private:
  void need(std::size_t n) const {
    if (in_.size() - pos_ < n) throw FormatError("state snapshot truncated");
  }

  std::span<const std::uint8_t> in_;
  std::size_t pos_ = 2;
};

}  // namespace

std::vector<std::uint8_t> serialize_state(const GeneratorState& state) {
  ByteWriter w;
  w.u8(static_cast<std::uint8_t>(kind_of(state)));
  w.u8(kStateFormatVersion);
  if (const auto* mt = std::get_if<Mt19937State>(&state)) {
    for (std::uint32_t word : mt->word_table) w.u32(word);
    w.u32(mt->index);
  } else if (const auto* pcg = std::get_if<Pcg32State>(&state)) {
    w.u64(pcg->state);
    w.u64(pcg->increment);
  } else {
    const auto& ph = std::get<PhiloxState>(state);
    for (std::uint32_t word : ph.counter) w.u32(word);
    for (std::uint32_t word : ph.key) w.u32(word);
    for (std::uint32_t word : ph.block) w.u32(word);
    w.u32(ph.block_pos);
  }
  return w.take();
}

GeneratorState deserialize_state(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 2) throw FormatError("state snapshot shorter than its header");
  if (bytes[1] != kStateFormatVersion) {
    throw SchemaVersionError("unsupported state format version " +
                             std::to_string(bytes[1]));
  }
  ByteReader r(bytes);
  switch (bytes[0]) {
    case static_cast<std::uint8_t>(GeneratorKind::Mt19937): {
      Mt19937State s;
      for (auto& word : s.word_table) word = r.u32();
      s.index = r.u32();
      r.expect_end();
      if (s.index > kMtWords) throw FormatError("mt19937 index out of range");
      return s;
    }
    case static_cast<std::uint8_t>(GeneratorKind::Pcg32): {
      Pcg32State s;
      s.state = r.u64();
      s.increment = r.u64();
      r.expect_end();
      if ((s.increment & 1U) == 0) throw FormatError("pcg32 increment must be odd");
      return s;
    }
    case static_cast<std::uint8_t>(GeneratorKind::Philox4x32_10): {
      PhiloxState s;
      for (auto& word : s.counter) word = r.u32();
      for (auto& word : s.key) word = r.u32();
      for (auto& word : s.block) word = r.u32();
      s.block_pos = r.u32();
      r.expect_end();
      if (s.block_pos > 4) throw FormatError("philox block_pos out of range");
      return s;
    }
    default:
      throw FormatError("unknown generator kind tag " + std::to_string(bytes[0]));
  }
}

}  // namespace prngbench
