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

#include "prngbench/linear_comp.hpp"

#include <cmath>
#include <map>
#include <mutex>

#include "prngbench/error.hpp"
#include "prngbench/linear_complexity.hpp"
#include "test_support.hpp"

namespace prngbench {
namespace {

// States x = 2L - N outside [-kRange, kRange + 1] carry < 2^-kRange mass.
constexpr int kRange = 80;
constexpr int kStates = 2 * kRange + 2;

JumpMoments compute_jump_moments(std::uint64_t n) {
  // prob[s], m1[s] = E[J; x], m2[s] = E[J^2; x], with x = s - kRange.
  std::vector<double> prob(kStates, 0.0), m1(kStates, 0.0), m2(kStates, 0.0);
  std::vector<double> np(kStates), n1(kStates), n2(kStates);
  prob[kRange] = 1.0;
  for (std::uint64_t step = 0; step < n; ++step) {
    std::fill(np.begin(), np.end(), 0.0);
    std::fill(n1.begin(), n1.end(), 0.0);
    std::fill(n2.begin(), n2.end(), 0.0);
    for (int s = 0; s < kStates; ++s) {
      if (prob[s] == 0.0 && m1[s] == 0.0) continue;
      const int x = s - kRange;
      if (x > 0) {
        np[s - 1] += prob[s];
        n1[s - 1] += m1[s];
        n2[s - 1] += m2[s];
        continue;
      }
      // No discrepancy: x -> x - 1.
      if (s > 0) {
        np[s - 1] += 0.5 * prob[s];
        n1[s - 1] += 0.5 * m1[s];
        n2[s - 1] += 0.5 * m2[s];
      }
      // Discrepancy with 2L <= N: jump, x -> 1 - x.
      const int t = 1 - x + kRange;
      if (t < kStates) {
        np[t] += 0.5 * prob[s];
        n1[t] += 0.5 * (m1[s] + prob[s]);
        n2[t] += 0.5 * (m2[s] + 2.0 * m1[s] + prob[s]);
      }
    }
    prob.swap(np);
    m1.swap(n1);
    m2.swap(n2);
  }
  JumpMoments r;
  double e2 = 0.0;
  for (int s = 0; s < kStates; ++s) {
    r.mean += m1[s];
    e2 += m2[s];
  }
  r.variance = e2 - r.mean * r.mean;
  return r;
}

}  // namespace

JumpMoments jump_count_moments(std::uint64_t n) {
  static std::mutex mu;
  static std::map<std::uint64_t, JumpMoments> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  const JumpMoments m = compute_jump_moments(n);
  std::lock_guard lock(mu);
  cache.emplace(n, m);
  return m;
}

ComplexityProfile complexity_profile(std::span<const std::uint8_t> bits) {
  detail::require(!bits.empty(), "complexity profile needs at least one bit");
  LinearComplexityTracker tracker(bits.size());
  ComplexityProfile prof;
  for (std::uint8_t b : bits) {
    if (const std::uint64_t h = tracker.push(b != 0); h > 0) prof.jump_sizes.push_back(h);
  }
  prof.complexity = tracker.complexity();
  return prof;
}

StatisticValue jump_size_statistic(std::span<const std::uint64_t> sizes) {
  const auto j = static_cast<double>(sizes.size());
  // Largest K with J 2^-(K-1) >= min expected: cells 1..K-1 and >= K.
  int k = 1;
  while (j * std::ldexp(1.0, -k) >= kLinearCompMinExpected) ++k;
  if (k < 2) return {"Size", 0.0, 0.5};

  std::vector<double> observed(static_cast<std::size_t>(k), 0.0);
  for (std::uint64_t h : sizes) {
    const std::uint64_t cell = std::min<std::uint64_t>(h, static_cast<std::uint64_t>(k));
    observed[cell - 1] += 1.0;
  }
  double chi = 0.0;
  for (int h = 1; h <= k; ++h) {
    const double expected = j * std::ldexp(1.0, -(h < k ? h : k - 1));
    const double diff = observed[h - 1] - expected;
    chi += diff * diff / expected;
  }
  return {"Size", chi, chi_square_sf(chi, k - 1)};
}

void validate_linear_comp(const TestParams& p) {
  detail::check_slice(p.bits);
  detail::require(p.L_bits >= kLinearCompMinBits, "LinearComp needs L_bits >= 64");
}

TestOutcome linear_comp(WordSource& src, const TestParams& p) {
  validate_linear_comp(p);
  LinearComplexityTracker tracker(p.L_bits);
  std::vector<std::uint64_t> sizes;
  for_each_word(src, p.L_bits, [&](std::uint32_t w) {
    if (const std::uint64_t h = tracker.push(slice_bit(w, p.bits)); h > 0) sizes.push_back(h);
  });

  const JumpMoments mom = jump_count_moments(p.L_bits);
  const auto jumps = static_cast<double>(sizes.size());
  const double z = (jumps - mom.mean) / std::sqrt(mom.variance);
  TestOutcome out;
  out.statistics.push_back({"Num", jumps, normal_sf(z)});
  out.statistics.push_back(jump_size_statistic(sizes));
  out.samples_consumed = p.L_bits;
  return out;
}

}  // namespace prngbench
