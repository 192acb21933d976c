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

#include <algorithm>
#include <string>

#include "prngbench/error.hpp"

namespace prngbench {

void VectorSource::fill(std::span<std::uint32_t> out) {
  if (out.size() > remaining()) {
    throw DomainError("word vector exhausted: " + std::to_string(out.size()) +
                      " requested, " + std::to_string(remaining()) + " left");
  }
  std::copy_n(words_.begin() + static_cast<std::ptrdiff_t>(pos_), out.size(), out.begin());
  pos_ += out.size();
}

}  // namespace prngbench
