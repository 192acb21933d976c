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

#include "prngbench/random_walk.hpp"

#include <array>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>

#include "prngbench/error.hpp"
#include "test_support.hpp"

namespace prngbench {
namespace {

class WalkTally {
 public:
  void start() {
    s_ = 0;
    prev_ = 0;
    prev2_ = 0;
    i_ = 0;
    st_ = WalkStatistics{};
  }

  void step(bool up) {
    ++i_;
    prev2_ = prev_;
    prev_ = s_;
    s_ += up ? 1 : -1;
    if (up) ++st_.H;
    if (s_ > 0 && static_cast<std::uint64_t>(s_) > st_.M) st_.M = static_cast<std::uint64_t>(s_);
    if ((i_ & 1U) && s_ > 0) st_.J += 2;
    if (s_ == 0) ++st_.R;
    if (i_ >= 3 && prev2_ * s_ < 0) ++st_.C;
  }

  const WalkStatistics& stats() const noexcept { return st_; }

 private:
  std::int64_t s_ = 0;
  std::int64_t prev_ = 0;   // S_(i-1)
  std::int64_t prev2_ = 0;  // S_(i-2)
  std::uint64_t i_ = 0;
  WalkStatistics st_;
};

void check_length(std::uint64_t length) {
  detail::require(length >= 2 && length % 2 == 0, "walk length must be even and >= 2");
}

double binom_half(std::uint64_t n, std::uint64_t k) {
  return std::exp(log_binomial(n, k) - static_cast<double>(n) * std::numbers::ln2);
}

}  // namespace

WalkStatistics walk_statistics(std::span<const std::uint8_t> steps) {
  WalkTally t;
  t.start();
  for (std::uint8_t s : steps) t.step(s != 0);
  return t.stats();
}

WalkDistributions enumerate_walk_distributions(std::uint64_t length) {
  check_length(length);
  detail::require(length <= kWalkEnumerationMax, "walk too long to enumerate");
  const std::size_t size = length + 1;
  std::vector<std::uint64_t> h(size), m(size), j(size), r(size), c(size);
  const std::uint64_t walks = std::uint64_t{1} << length;
  WalkTally t;
  for (std::uint64_t w = 0; w < walks; ++w) {
    t.start();
    for (std::uint64_t i = 0; i < length; ++i) t.step((w >> i) & 1U);
    const auto& s = t.stats();
    ++h[s.H];
    ++m[s.M];
    ++j[s.J];
    ++r[s.R];
    ++c[s.C];
  }
  auto norm = [walks](const std::vector<std::uint64_t>& v) {
    std::vector<double> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
      out[i] = static_cast<double>(v[i]) / static_cast<double>(walks);
    }
    return out;
  };
  return {norm(h), norm(m), norm(j), norm(r), norm(c)};
}

WalkDistributions closed_form_walk_distributions(std::uint64_t length) {
  check_length(length);
  const std::uint64_t l = length;
  const std::uint64_t half = l / 2;
  WalkDistributions d;
  d.H.assign(l + 1, 0.0);
  d.M.assign(l + 1, 0.0);
  d.J.assign(l + 1, 0.0);
  d.R.assign(l + 1, 0.0);
  d.C.assign(l + 1, 0.0);

  for (std::uint64_t k = 0; k <= l; ++k) d.H[k] = binom_half(l, k);

  // Reflection principle: P(M = m) = P(S_l = m) + P(S_l = m + 1).
  for (std::uint64_t mval = 0; mval <= l; ++mval) {
    const std::uint64_t s = (mval + l) % 2 == 0 ? mval : mval + 1;
    if (s <= l) d.M[mval] = binom_half(l, (l + s) / 2);
  }

  // Discrete arcsine law: P(J = 2k) = u_2k u_(l-2k), u_2j = C(2j, j) 2^-2j.
  for (std::uint64_t k = 0; k <= half; ++k) {
    d.J[2 * k] = binom_half(2 * k, k) * binom_half(l - 2 * k, half - k);
  }

  // Returns: P(R = r) = C(l - r, l/2) 2^-(l-r); the walk ends at zero with
  // P(R = r, S_l = 0) = r / (l - r) * P(R = r). Each return before time l
  // is a sign change with probability 1/2, independently.
  for (std::uint64_t rv = 0; rv <= half; ++rv) {
    const double pr = binom_half(l - rv, half);
    d.R[rv] = pr;
    const double p_end0 = pr * static_cast<double>(rv) / static_cast<double>(l - rv);
    const double p_open = pr - p_end0;
    for (std::uint64_t cv = 0; cv <= rv; ++cv) {
      d.C[cv] += p_open * binom_half(rv, cv);
      if (rv >= 1 && cv <= rv - 1) d.C[cv] += p_end0 * binom_half(rv - 1, cv);
    }
  }
  return d;
}

const WalkDistributions& walk_distributions(std::uint64_t length) {
  static std::mutex mu;
  static std::map<std::uint64_t, std::unique_ptr<WalkDistributions>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[length];
  if (!slot) {
    slot = std::make_unique<WalkDistributions>(length <= kWalkEnumerationMax
                                                   ? enumerate_walk_distributions(length)
                                                   : closed_form_walk_distributions(length));
  }
  return *slot;
}

namespace {

std::size_t group_count(const std::vector<double>& probs, double total) {
  std::size_t groups = 0;
  double e = 0.0;
  for (double p : probs) {
    e += total * p;
    if (e >= kWalkMinExpected) {
      ++groups;
      e = 0.0;
    }
  }
  return groups;
}

}  // namespace

void validate_random_walk(const TestParams& p) {
  detail::check_slice(p.bits);
  check_length(p.walk_length);
  detail::require(p.n >= 1, "RandomWalk needs at least one walk");
  const auto& d = walk_distributions(p.walk_length);
  const auto total = static_cast<double>(p.n);
  for (const auto* probs : {&d.H, &d.M, &d.J, &d.R, &d.C}) {
    detail::require(group_count(*probs, total) >= 2,
                    "RandomWalk needs more walks for a chi-square with two cells");
  }
}

TestOutcome random_walk(WordSource& src, const TestParams& p) {
  validate_random_walk(p);
  const std::size_t size = p.walk_length + 1;
  std::array<std::vector<std::uint64_t>, 5> counts;
  for (auto& v : counts) v.assign(size, 0);

  WalkTally tally;
  std::uint64_t step = 0;
  tally.start();
  for_each_word(src, p.n * p.walk_length, [&](std::uint32_t w) {
    tally.step(slice_bit(w, p.bits));
    if (++step == p.walk_length) {
      const auto& s = tally.stats();
      ++counts[0][s.H];
      ++counts[1][s.M];
      ++counts[2][s.J];
      ++counts[3][s.R];
      ++counts[4][s.C];
      tally.start();
      step = 0;
    }
  });

  const auto& d = walk_distributions(p.walk_length);
  const std::array<const std::vector<double>*, 5> probs{&d.H, &d.M, &d.J, &d.R, &d.C};
  static constexpr std::array<const char*, 5> kNames{"H", "M", "J", "R", "C"};
  TestOutcome out;
  for (std::size_t i = 0; i < 5; ++i) {
    const auto chi = detail::grouped_chi_square(counts[i], *probs[i], kWalkMinExpected);
    out.statistics.push_back({kNames[i], chi.statistic, chi.p_value});
  }
  out.samples_consumed = p.n * p.walk_length;
  return out;
}

}  // namespace prngbench
