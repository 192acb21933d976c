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

#include "prngbench/serial_over.hpp"

#include <algorithm>
#include <vector>

#include "prngbench/error.hpp"
#include "test_support.hpp"

namespace prngbench {
namespace {

// sum over circular overlapping s-tuples of (count per cell)^2.
double sum_squared_counts(std::span<const std::uint32_t> cells, std::uint64_t d, int s) {
  const std::size_t n = cells.size();
  const std::uint64_t k = *detail::checked_power(d, s);
  std::vector<std::uint32_t> counts(k, 0);
  const std::uint64_t top = k / d;
  std::uint64_t idx = 0;
  for (int j = 0; j < s; ++j) idx = idx * d + cells[j % n];
  for (std::size_t i = 0; i < n; ++i) {
    ++counts[idx];
    idx = (idx % top) * d + cells[(i + s) % n];
  }
  double sum = 0.0;
  for (std::uint32_t c : counts) sum += static_cast<double>(std::uint64_t{c} * c);
  return sum;
}

}  // namespace

double serial_over_statistic(std::span<const std::uint32_t> cells, std::uint64_t d, int t) {
  detail::require(t >= 2, "SerialOver needs t >= 2");
  detail::require(!cells.empty(), "SerialOver needs at least one sample");
  detail::require(std::all_of(cells.begin(), cells.end(), [d](std::uint32_t c) { return c < d; }),
                  "SerialOver cell index out of range");
  const auto k = detail::checked_power(d, t);
  detail::require(k && *k <= kSerialOverMaxCells, "SerialOver cell count d^t exceeds 2^28");
  const auto n = static_cast<double>(cells.size());
  const auto kt = static_cast<double>(*k);
  const auto ks = static_cast<double>(*k / d);
  // The "- n" terms of both psi2 cancel.
  const double x = (kt * sum_squared_counts(cells, d, t) - ks * sum_squared_counts(cells, d, t - 1)) / n;
  return std::max(0.0, x);
}

void validate_serial_over(const TestParams& p) {
  detail::check_slice(p.bits);
  detail::check_cells_per_dim(p.d);
  detail::require(p.t >= 2, "SerialOver needs t >= 2");
  const auto k = detail::checked_power(p.d, p.t);
  detail::require(k && *k <= kSerialOverMaxCells, "SerialOver cell count d^t exceeds 2^28");
  detail::require(p.n / 10 >= *k, "SerialOver needs n >= 10 d^t");
}

TestOutcome serial_over(WordSource& src, const TestParams& p) {
  validate_serial_over(p);
  const auto cells = detail::read_cells(src, p.n, p.bits, p.d);
  const double x = serial_over_statistic(cells, p.d, p.t);
  const auto k = *detail::checked_power(p.d, p.t);
  const auto dof = static_cast<std::int64_t>(k - k / p.d);
  TestOutcome out;
  out.statistics.push_back({"X", x, chi_square_sf(x, dof)});
  out.samples_consumed = p.n;
  return out;
}

}  // namespace prngbench
