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

#include "prngbench/word_source.hpp"

#include <gtest/gtest.h>

#include "prngbench/error.hpp"

namespace prngbench {
namespace {

TEST(WordSources, GeneratorSourceMatchesState) {
  auto state = stream_from_seed(GeneratorKind::Pcg32, 4);
  GeneratorSource src(state);
  std::vector<std::uint32_t> buf(10);
  src.fill(buf);
  for (auto w : buf) EXPECT_EQ(w, next_word(state));
  EXPECT_EQ(src.state(), state);
}

TEST(WordSources, CountingAndVector) {
  VectorSource v({1, 2, 3, 4, 5});
  CountingSource c(v);
  EXPECT_EQ(c.next(), 1U);
  std::vector<std::uint32_t> buf(3);
  c.fill(buf);
  EXPECT_EQ(buf, (std::vector<std::uint32_t>{2, 3, 4}));
  EXPECT_EQ(c.count(), 4U);
  EXPECT_EQ(v.remaining(), 1U);
  EXPECT_THROW(c.fill(buf), DomainError);
}

TEST(WordSources, ForEachWordChunks) {
  FunctionSource f([](std::uint64_t i) { return static_cast<std::uint32_t>(i); });
  std::uint64_t expected = 0;
  for_each_word(f, 10000, [&](std::uint32_t w) { EXPECT_EQ(w, expected++); });
  EXPECT_EQ(expected, 10000U);
  for_each_word(f, 0, [](std::uint32_t) { FAIL(); });
  EXPECT_EQ(f.next(), 10000U);
}

}  // namespace
}  // namespace prngbench
