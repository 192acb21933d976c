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

#include "prngbench/kat.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include "prngbench/error.hpp"

namespace prngbench {

namespace detail {
std::string_view golden_vectors_text();
}  // namespace detail

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

[[noreturn]] void bad(std::size_t line, const std::string& msg) {
  throw FormatError("kat line " + std::to_string(line) + ": " + msg);
}

std::uint64_t parse_uint(std::string_view s, std::size_t line, int base = 0) {
  if (base == 0) {
    base = 10;
    if (s.size() > 2 && s[0] == '0' && (s[1] == 'x' || s[1] == 'X')) {
      s.remove_prefix(2);
      base = 16;
    }
  }
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v, base);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    bad(line, "bad integer '" + std::string(s) + "'");
  }
  return v;
}

std::uint32_t parse_u32(std::string_view s, std::size_t line, int base = 0) {
  const std::uint64_t v = parse_uint(s, line, base);
  if (v > 0xffffffffULL) bad(line, "value '" + std::string(s) + "' exceeds 32 bits");
  return static_cast<std::uint32_t>(v);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (true) {
    const auto k = s.find(sep, pos);
    out.push_back(s.substr(pos, k == std::string_view::npos ? std::string_view::npos : k - pos));
    if (k == std::string_view::npos) break;
    pos = k + 1;
  }
  return out;
}

template <std::size_t N>
std::array<std::uint32_t, N> parse_words(std::string_view s, std::size_t line) {
  const auto parts = split(s, ':');
  if (parts.size() != N) bad(line, "expected " + std::to_string(N) + " ':'-separated words");
  std::array<std::uint32_t, N> out{};
  for (std::size_t i = 0; i < N; ++i) out[i] = parse_u32(parts[i], line, 16);
  return out;
}

std::string hex32(std::uint32_t w) {
  static constexpr char kHex[] = "0123456789abcdef";
  std::string s(8, '0');
  for (int i = 0; i < 8; ++i) s[7 - i] = kHex[(w >> (4 * i)) & 15U];
  return s;
}

std::string hex64(std::uint64_t v) {
  std::ostringstream ss;
  ss << "0x" << std::hex << v;
  return ss.str();
}

KatVector parse_record(std::string_view line, std::size_t line_no) {
  std::vector<std::string_view> tokens;
  for (auto t : split(line, ' ')) {
    if (!t.empty()) tokens.push_back(t);
  }
  KatVector v;
  v.line = line_no;
  try {
    v.kind = parse_generator_kind(tokens.front());
  } catch (const ParameterError& e) {
    bad(line_no, e.what());
  }
  std::map<std::string, std::string_view, std::less<>> kv;
  for (std::size_t i = 1; i < tokens.size(); ++i) {
    const auto eq = tokens[i].find('=');
    if (eq == std::string_view::npos) bad(line_no, "expected key=value, got '" + std::string(tokens[i]) + "'");
    if (!kv.emplace(std::string(tokens[i].substr(0, eq)), tokens[i].substr(eq + 1)).second) {
      bad(line_no, "repeated key '" + std::string(tokens[i].substr(0, eq)) + "'");
    }
  }
  auto take = [&](const char* key) -> std::optional<std::string_view> {
    auto it = kv.find(key);
    if (it == kv.end()) return std::nullopt;
    const std::string_view val = it->second;
    kv.erase(it);
    return val;
  };

  const auto words = take("words");
  if (!words || words->empty()) bad(line_no, "missing words=");
  for (auto w : split(*words, ',')) v.expected_words.push_back(parse_u32(w, line_no, 16));
  if (const auto off = take("offset")) v.offset = parse_uint(*off, line_no);

  if (const auto ss = take("stream_seed")) {
    v.seeding = StreamSeeding{parse_uint(*ss, line_no)};
  } else {
    switch (v.kind) {
      case GeneratorKind::Mt19937: {
        const auto seed = take("seed");
        if (!seed) bad(line_no, "mt19937 needs seed= or stream_seed=");
        v.seeding = MtSeeding{parse_u32(*seed, line_no)};
        break;
      }
      case GeneratorKind::Pcg32: {
        const auto st = take("initstate");
        const auto sq = take("initseq");
        if (!st || !sq) bad(line_no, "pcg32 needs initstate= and initseq=, or stream_seed=");
        v.seeding = PcgSeeding{parse_uint(*st, line_no), parse_uint(*sq, line_no)};
        break;
      }
      case GeneratorKind::Philox4x32_10: {
        const auto c = take("counter");
        const auto k = take("key");
        if (!c || !k) bad(line_no, "philox4x32_10 needs counter= and key=, or stream_seed=");
        v.seeding = PhiloxSeeding{parse_words<4>(*c, line_no), parse_words<2>(*k, line_no)};
        break;
      }
    }
  }
  if (!kv.empty()) bad(line_no, "unexpected key '" + kv.begin()->first + "'");
  return v;
}

}  // namespace

std::vector<KatVector> parse_kat(std::string_view text) {
  std::vector<KatVector> out;
  std::size_t line_no = 0;
  for (auto raw : split(text, '\n')) {
    ++line_no;
    std::string_view line = raw.substr(0, raw.find('#'));
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) {
      line.remove_suffix(1);
    }
    while (!line.empty() && (line.front() == ' ' || line.front() == '\t')) line.remove_prefix(1);
    if (line.empty()) continue;
    out.push_back(parse_record(line, line_no));
  }
  return out;
}

std::vector<KatVector> load_kat_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_kat(ss.str());
}

std::string format_kat(const KatVector& v) {
  std::string s(to_string(v.kind));
  std::visit(Overloaded{[&](const MtSeeding& m) { s += " seed=" + std::to_string(m.seed); },
                        [&](const PcgSeeding& p) {
                          s += " initstate=" + hex64(p.initstate) + " initseq=" + hex64(p.initseq);
                        },
                        [&](const PhiloxSeeding& p) {
                          s += " counter=";
                          for (std::size_t i = 0; i < 4; ++i) s += (i ? ":" : "") + hex32(p.counter[i]);
                          s += " key=" + hex32(p.key[0]) + ":" + hex32(p.key[1]);
                        },
                        [&](const StreamSeeding& st) { s += " stream_seed=" + hex64(st.seed); }},
             v.seeding);
  s += " offset=" + std::to_string(v.offset) + " words=";
  for (std::size_t i = 0; i < v.expected_words.size(); ++i) {
    if (i) s += ',';
    s += hex32(v.expected_words[i]);
  }
  return s;
}

std::string_view builtin_kat_text() { return detail::golden_vectors_text(); }

const std::vector<KatVector>& builtin_kat_vectors() {
  static const std::vector<KatVector> vectors = parse_kat(builtin_kat_text());
  return vectors;
}

GeneratorState kat_initial_state(const KatVector& v) {
  return std::visit(
      Overloaded{[](const MtSeeding& m) -> GeneratorState { return mt_seed(m.seed); },
                 [](const PcgSeeding& p) -> GeneratorState {
                   return pcg32_seed(p.initstate, p.initseq);
                 },
                 [](const PhiloxSeeding& p) -> GeneratorState {
                   return philox_seed(p.counter, p.key);
                 },
                 [&v](const StreamSeeding& s) -> GeneratorState {
                   return stream_from_seed(v.kind, s.seed);
                 }},
      v.seeding);
}

KatVerdict verify_kat(const KatVector& v) {
  if (v.expected_words.empty()) throw FormatError("KAT vector has no expected words");
  GeneratorState state = kat_initial_state(v);
  if (kind_of(state) != v.kind) throw FormatError("KAT seeding does not match its kind");
  discard(state, v.offset);
  KatVerdict verdict;
  for (std::size_t i = 0; i < v.expected_words.size(); ++i) {
    const std::uint32_t got = next_word(state);
    if (got != v.expected_words[i]) {
      verdict.pass = false;
      verdict.mismatch_index = i;
      verdict.expected = v.expected_words[i];
      verdict.actual = got;
      break;
    }
  }
  return verdict;
}

std::vector<std::uint32_t> read_word_dump(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::vector<std::uint32_t> words;
  std::array<unsigned char, 4> b{};
  while (true) {
    in.read(reinterpret_cast<char*>(b.data()), 4);
    const auto got = in.gcount();
    if (got == 0) break;
    if (got != 4) throw FormatError(path.string() + ": size is not a multiple of 4 bytes");
    words.push_back(std::uint32_t{b[0]} | std::uint32_t{b[1]} << 8 | std::uint32_t{b[2]} << 16 |
                    std::uint32_t{b[3]} << 24);
  }
  return words;
}

void write_word_dump(const std::filesystem::path& path, std::span<const std::uint32_t> words) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  for (std::uint32_t w : words) {
    const std::array<char, 4> b{static_cast<char>(w), static_cast<char>(w >> 8),
                                static_cast<char>(w >> 16), static_cast<char>(w >> 24)};
    out.write(b.data(), 4);
  }
  if (!out) throw IoError("write failed for " + path.string());
}

StreamDiff diff_word_streams(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b) {
  StreamDiff d;
  d.words_a = a.size();
  d.words_b = b.size();
  d.compared = std::min(a.size(), b.size());
  const auto mm = std::mismatch(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(d.compared), b.begin());
  if (mm.first != a.begin() + static_cast<std::ptrdiff_t>(d.compared)) {
    d.divergence = static_cast<std::uint64_t>(mm.first - a.begin());
    d.word_a = *mm.first;
    d.word_b = *mm.second;
  } else if (a.size() != b.size()) {
    d.divergence = d.compared;
  }
  d.equal = !d.divergence.has_value();
  return d;
}

namespace {

std::uint64_t dump_words(const std::filesystem::path& p) {
  std::error_code ec;
  const auto size = std::filesystem::file_size(p, ec);
  if (ec) throw IoError("cannot stat " + p.string() + ": " + ec.message());
  if (size % 4 != 0) throw FormatError(p.string() + ": size is not a multiple of 4 bytes");
  return size / 4;
}

}  // namespace

StreamDiff diff_streams(const std::filesystem::path& a, const std::filesystem::path& b) {
  StreamDiff d;
  d.words_a = dump_words(a);
  d.words_b = dump_words(b);
  d.compared = std::min(d.words_a, d.words_b);
  std::ifstream ia(a, std::ios::binary);
  std::ifstream ib(b, std::ios::binary);
  if (!ia) throw IoError("cannot open " + a.string());
  if (!ib) throw IoError("cannot open " + b.string());

  constexpr std::size_t kChunk = 1 << 16;
  std::vector<unsigned char> ba(4 * kChunk), bb(4 * kChunk);
  std::uint64_t done = 0;
  while (done < d.compared) {
    const auto take = static_cast<std::size_t>(std::min<std::uint64_t>(kChunk, d.compared - done));
    ia.read(reinterpret_cast<char*>(ba.data()), static_cast<std::streamsize>(4 * take));
    ib.read(reinterpret_cast<char*>(bb.data()), static_cast<std::streamsize>(4 * take));
    if (!ia || !ib) throw IoError("read failed while comparing dumps");
    for (std::size_t i = 0; i < take; ++i) {
      const unsigned char* pa = &ba[4 * i];
      const unsigned char* pb = &bb[4 * i];
      if (std::equal(pa, pa + 4, pb)) continue;
      auto word = [](const unsigned char* p) {
        return std::uint32_t{p[0]} | std::uint32_t{p[1]} << 8 | std::uint32_t{p[2]} << 16 |
               std::uint32_t{p[3]} << 24;
      };
      d.divergence = done + i;
      d.word_a = word(pa);
      d.word_b = word(pb);
      d.equal = false;
      return d;
    }
    done += take;
  }
  if (d.words_a != d.words_b) d.divergence = d.compared;
  d.equal = !d.divergence.has_value();
  return d;
}

}  // namespace prngbench
