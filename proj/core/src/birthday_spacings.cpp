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

#include "prngbench/birthday_spacings.hpp"

#include <algorithm>
#include <vector>

#include "prngbench/error.hpp"
#include "test_support.hpp"

namespace prngbench {

std::uint64_t count_duplicate_spacings(std::span<const std::uint64_t> birthdays) {
  if (birthdays.size() < 3) return 0;
  std::vector<std::uint64_t> b(birthdays.begin(), birthdays.end());
  std::sort(b.begin(), b.end());
  for (std::size_t i = 0; i + 1 < b.size(); ++i) b[i] = b[i + 1] - b[i];
  b.pop_back();
  std::sort(b.begin(), b.end());
  std::uint64_t y = 0;
  for (std::size_t i = 1; i < b.size(); ++i) {
    if (b[i] == b[i - 1]) ++y;
  }
  return y;
}

double birthday_lambda(std::uint64_t n, std::uint64_t k) noexcept {
  const auto nd = static_cast<long double>(n);
  return static_cast<double>(nd * nd * nd / (4.0L * static_cast<long double>(k)));
}

void validate_birthday_spacings(const TestParams& p) {
  detail::check_slice(p.bits);
  detail::check_cells_per_dim(p.d);
  detail::require(p.t >= 1, "BirthdaySpacings needs t >= 1");
  detail::require(p.n >= 2, "BirthdaySpacings needs n >= 2");
  const auto k = detail::checked_power(p.d, p.t);
  detail::require(k && *k <= (std::uint64_t{1} << 63), "BirthdaySpacings needs k = d^t <= 2^63");
  const double lambda = birthday_lambda(p.n, *k);
  detail::require(lambda >= kBirthdayMinLambda && lambda <= kBirthdayMaxLambda,
                  "BirthdaySpacings needs n^3/(4k) in [1, 1e4], got " + std::to_string(lambda));
}

TestOutcome birthday_spacings(WordSource& src, const TestParams& p) {
  validate_birthday_spacings(p);
  const std::uint64_t k = *detail::checked_power(p.d, p.t);
  std::vector<std::uint64_t> days;
  days.reserve(p.n);
  std::uint64_t acc = 0;
  int filled = 0;
  for_each_word(src, p.n * static_cast<std::uint64_t>(p.t), [&](std::uint32_t w) {
    acc = acc * p.d + slice_cell(w, p.bits, p.d);
    if (++filled == p.t) {
      days.push_back(acc);
      acc = 0;
      filled = 0;
    }
  });
  const std::uint64_t y = count_duplicate_spacings(days);
  const auto tails = poisson_tail(birthday_lambda(p.n, k), y);
  TestOutcome out;
  out.statistics.push_back({"Y", static_cast<double>(y), discrete_p_value(tails.left, tails.right)});
  out.samples_consumed = p.n * static_cast<std::uint64_t>(p.t);
  return out;
}

}  // namespace prngbench
