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

#include "prngbench/collision_over.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "prngbench/error.hpp"
#include "test_support.hpp"

namespace prngbench {
namespace {

constexpr std::uint64_t kBitmapMaxCells = std::uint64_t{1} << 27;

std::uint64_t collisions_by_bitmap(std::span<const std::uint64_t> cells, std::uint64_t k) {
  std::vector<std::uint64_t> seen((k + 63) / 64, 0);
  std::uint64_t c = 0;
  for (std::uint64_t cell : cells) {
    std::uint64_t& w = seen[cell / 64];
    const std::uint64_t bit = std::uint64_t{1} << (cell % 64);
    if (w & bit) {
      ++c;
    } else {
      w |= bit;
    }
  }
  return c;
}

}  // namespace

std::uint64_t count_collisions(std::span<const std::uint64_t> cells) {
  std::vector<std::uint64_t> sorted(cells.begin(), cells.end());
  std::sort(sorted.begin(), sorted.end());
  const auto distinct = std::unique(sorted.begin(), sorted.end()) - sorted.begin();
  return cells.size() - static_cast<std::uint64_t>(distinct);
}

double collision_mean(std::uint64_t n, std::uint64_t k) {
  const auto nd = static_cast<double>(n);
  const auto kd = static_cast<double>(k);
  return nd + kd * std::expm1(nd * std::log1p(-1.0 / kd));
}

void validate_collision_over(const TestParams& p) {
  detail::check_slice(p.bits);
  detail::check_cells_per_dim(p.d);
  detail::require(p.t >= 1, "CollisionOver needs t >= 1");
  detail::require(p.n >= 1, "CollisionOver needs n >= 1");
  const auto k = detail::checked_power(p.d, p.t);
  detail::require(k.has_value(), "CollisionOver cell count d^t overflows 64 bits");
  detail::require(p.n < *k / 4, "CollisionOver needs n < k / 4 (sparse regime)");
}

TestOutcome collision_over(WordSource& src, const TestParams& p) {
  validate_collision_over(p);
  const std::uint64_t k = *detail::checked_power(p.d, p.t);
  const auto raw = detail::read_cells(src, p.n, p.bits, p.d);

  std::vector<std::uint64_t> tuples;
  tuples.reserve(raw.size());
  const std::size_t n = raw.size();
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t idx = 0;
    for (int j = 0; j < p.t; ++j) idx = idx * p.d + raw[(i + j) % n];
    tuples.push_back(idx);
  }
  const std::uint64_t c =
      k <= kBitmapMaxCells ? collisions_by_bitmap(tuples, k) : count_collisions(tuples);

  TestOutcome out;
  out.samples_consumed = p.n;
  const double mu = collision_mean(p.n, k);
  if (p.n < 2 || !(mu > 0.0)) {
    out.statistics.push_back({"C", static_cast<double>(c), 0.5});
    return out;
  }
  const auto tails = poisson_tail(mu, c);
  out.statistics.push_back({"C", static_cast<double>(c), discrete_p_value(tails.left, tails.right)});
  return out;
}

}  // namespace prngbench
