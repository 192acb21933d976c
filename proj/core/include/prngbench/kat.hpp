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

#ifndef PRNGBENCH_KAT_HPP_
#define PRNGBENCH_KAT_HPP_

// Known-answer vectors and raw word dumps.
//
// Vector files hold one vector per line; '#' starts a comment:
//
//   mt19937 seed=5489 offset=0 words=d091bb5c,22ae9ef6
//   pcg32 initstate=0x2a initseq=0x36 offset=0 words=a15c02b7
//   philox4x32_10 counter=0:0:0:0 key=0:0 offset=0 words=6627e8d5
//   pcg32 stream_seed=0x1571 offset=0 words=1244876e
//
// Integers are decimal or 0x-prefixed hex; philox counter and key words are
// hex, lowest word first. Dumps are bare little-endian 32-bit words.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "prngbench/generators.hpp"

namespace prngbench {

struct MtSeeding {
  std::uint32_t seed = 0;
};
struct PcgSeeding {
  std::uint64_t initstate = 0;
  std::uint64_t initseq = 0;
};
struct PhiloxSeeding {
  PhiloxCounter counter{};
  PhiloxKey key{};
};
// The campaign path: stream_from_seed(kind, seed).
struct StreamSeeding {
  std::uint64_t seed = 0;
};

using KatSeeding = std::variant<MtSeeding, PcgSeeding, PhiloxSeeding, StreamSeeding>;

struct KatVector {
  GeneratorKind kind = GeneratorKind::Mt19937;
  KatSeeding seeding;
  std::uint64_t offset = 0;
  std::vector<std::uint32_t> expected_words;
  std::size_t line = 0;  // source line, 0 if built in code
};

// Throws FormatError (message carries the line) on malformed records and on
// seedings that do not belong to the kind.
std::vector<KatVector> parse_kat(std::string_view text);
std::vector<KatVector> load_kat_file(const std::filesystem::path& path);

// Writes the record form of a vector (inverse of parse_kat for one line).
std::string format_kat(const KatVector& v);

// The golden vectors compiled into the library.
const std::vector<KatVector>& builtin_kat_vectors();
std::string_view builtin_kat_text();

GeneratorState kat_initial_state(const KatVector& v);

struct KatVerdict {
  bool pass = true;
  std::optional<std::size_t> mismatch_index;  // into expected_words
  std::uint32_t expected = 0;
  std::uint32_t actual = 0;
};

KatVerdict verify_kat(const KatVector& v);

std::vector<std::uint32_t> read_word_dump(const std::filesystem::path& path);
void write_word_dump(const std::filesystem::path& path, std::span<const std::uint32_t> words);

struct StreamDiff {
  bool equal = true;
  std::uint64_t words_a = 0;
  std::uint64_t words_b = 0;
  std::uint64_t compared = 0;             // min(words_a, words_b)
  std::optional<std::uint64_t> divergence;  // first differing index
  std::optional<std::uint32_t> word_a;      // values there, when both exist
  std::optional<std::uint32_t> word_b;
};

// A length mismatch without an earlier difference diverges at the shorter
// length. Symmetric up to swapping the a/b fields.
StreamDiff diff_word_streams(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b);

// Streams both files; FormatError when a size is not a multiple of 4.
StreamDiff diff_streams(const std::filesystem::path& a, const std::filesystem::path& b);

}  // namespace prngbench

#endif  // PRNGBENCH_KAT_HPP_
