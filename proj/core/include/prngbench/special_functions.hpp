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

#ifndef PRNGBENCH_SPECIAL_FUNCTIONS_HPP_
#define PRNGBENCH_SPECIAL_FUNCTIONS_HPP_

// Distribution tails used to turn test statistics into p-values.
//
// Nothing here clamps its result away from 0 or 1; that happens when a
// TestResult is built, so extreme tails stay distinguishable.

#include <cstdint>

namespace prngbench {

// A probability in [0, 1]. Construction rejects NaN and out-of-range values.
class PValue {
 public:
  constexpr PValue() = default;
  explicit PValue(double value);

  constexpr double value() const noexcept { return value_; }
  constexpr operator double() const noexcept { return value_; }

  friend constexpr bool operator==(PValue a, PValue b) noexcept {
    return a.value_ == b.value_;
  }

 private:
  double value_ = 1.0;
};

// Regularized lower and upper incomplete gamma functions P(a, x), Q(a, x).
double regularized_gamma_p(double a, double x);
double regularized_gamma_q(double a, double x);

// P(X >= x) for X ~ chi-square(dof). Throws DomainError for x < 0, dof < 1.
double chi_square_sf(double x, std::int64_t dof);

// Standard normal distribution function and its complement, computed
// separately so that both tails keep full relative precision.
double normal_cdf(double z);
double normal_sf(double z);

struct PoissonTails {
  double left = 0.0;   // P(X <= k)
  double right = 0.0;  // P(X >= k)
};

// Both tails at k for X ~ Poisson(lambda). The smaller side is summed
// directly; the other is its complement. Throws DomainError for lambda <= 0.
PoissonTails poisson_tail(double lambda, std::uint64_t k);

double log_poisson_pmf(double lambda, std::uint64_t k);

// log C(n, k); -inf when k > n.
double log_binomial(std::uint64_t n, std::uint64_t k);

// TestU01's rule for a discrete statistic with tails left = P(X <= x) and
// right = P(X >= x): the right tail when it is the smaller one, 1 - left
// otherwise, and 0.5 when both exceed one half.
double discrete_p_value(double left, double right) noexcept;

}  // namespace prngbench

#endif  // PRNGBENCH_SPECIAL_FUNCTIONS_HPP_
