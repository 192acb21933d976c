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

#ifndef PRNGBENCH_WORD_SOURCE_HPP_
#define PRNGBENCH_WORD_SOURCE_HPP_

// Sources of 32-bit words consumed by the battery.

#include <array>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "prngbench/generators.hpp"

namespace prngbench {

class WordSource {
 public:
  virtual ~WordSource() = default;

  // Writes exactly out.size() words. Throws when the source cannot supply them.
  virtual void fill(std::span<std::uint32_t> out) = 0;

  std::uint32_t next() {
    std::uint32_t w = 0;
    fill(std::span<std::uint32_t>(&w, 1));
    return w;
  }
};

// Draws from a generator state owned by the source.
class GeneratorSource final : public WordSource {
 public:
  explicit GeneratorSource(GeneratorState state) : state_(std::move(state)) {}

  void fill(std::span<std::uint32_t> out) override { fill_words(state_, out); }

  const GeneratorState& state() const noexcept { return state_; }

 private:
  GeneratorState state_;
};

// Forwards to another source and counts the words that pass through.
class CountingSource final : public WordSource {
 public:
  explicit CountingSource(WordSource& inner) : inner_(inner) {}

  void fill(std::span<std::uint32_t> out) override {
    inner_.fill(out);
    count_ += out.size();
  }

  std::uint64_t count() const noexcept { return count_; }

 private:
  WordSource& inner_;
  std::uint64_t count_ = 0;
};

// word i = f(i); handy for synthetic and degenerate inputs.
class FunctionSource final : public WordSource {
 public:
  explicit FunctionSource(std::function<std::uint32_t(std::uint64_t)> f)
      : f_(std::move(f)) {}

  void fill(std::span<std::uint32_t> out) override {
    for (auto& w : out) w = f_(index_++);
  }

 private:
  std::function<std::uint32_t(std::uint64_t)> f_;
  std::uint64_t index_ = 0;
};

// Replays a fixed word vector once; throws DomainError when exhausted.
class VectorSource final : public WordSource {
 public:
  explicit VectorSource(std::vector<std::uint32_t> words) : words_(std::move(words)) {}

  void fill(std::span<std::uint32_t> out) override;

  std::size_t remaining() const noexcept { return words_.size() - pos_; }

 private:
  std::vector<std::uint32_t> words_;
  std::size_t pos_ = 0;
};

// Reads exactly `count` words in bounded chunks and hands each one to f.
template <class F>
void for_each_word(WordSource& src, std::uint64_t count, F&& f) {
  std::array<std::uint32_t, 4096> buf;
  while (count > 0) {
    const std::size_t take =
        count < buf.size() ? static_cast<std::size_t>(count) : buf.size();
    src.fill(std::span<std::uint32_t>(buf.data(), take));
    for (std::size_t i = 0; i < take; ++i) f(buf[i]);
    count -= take;
  }
}

}  // namespace prngbench

#endif  // PRNGBENCH_WORD_SOURCE_HPP_
