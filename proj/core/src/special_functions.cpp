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

#include "prngbench/special_functions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "prngbench/error.hpp"

namespace prngbench {

PValue::PValue(double value) : value_(value) {
  if (!(value >= 0.0 && value <= 1.0)) {
    throw DomainError("p-value outside [0, 1]: " + std::to_string(value));
  }
}

namespace {

constexpr double kEpsilon = 1e-16;
constexpr int kMaxIterations = 1'000'000;

// exp(-x + a log x - lgamma(a)), the common prefactor.
double gamma_prefactor(double a, double x) {
  return std::exp(-x + a * std::log(x) - std::lgamma(a));
}

double gamma_p_series(double a, double x) {
  double ap = a;
  double term = 1.0 / a;
  double sum = term;
  for (int i = 0; i < kMaxIterations; ++i) {
    ap += 1.0;
    term *= x / ap;
    sum += term;
    if (std::fabs(term) < std::fabs(sum) * kEpsilon) break;
  }
  return sum * gamma_prefactor(a, x);
}

// Modified Lentz evaluation of the continued fraction for Q(a, x).
double gamma_q_fraction(double a, double x) {
  constexpr double kTiny = 1e-300;
  double b = x + 1.0 - a;
  double c = 1.0 / kTiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < kMaxIterations; ++i) {
    const double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = b + an / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::fabs(delta - 1.0) < kEpsilon) break;
  }
  return h * gamma_prefactor(a, x);
}

void check_gamma_args(double a, double x) {
  if (!(a > 0.0) || !(x >= 0.0)) {
    throw DomainError("incomplete gamma needs a > 0 and x >= 0");
  }
}

}  // namespace

double regularized_gamma_p(double a, double x) {
  check_gamma_args(a, x);
  if (x == 0.0) return 0.0;
  if (x < a + 1.0) return gamma_p_series(a, x);
  return 1.0 - gamma_q_fraction(a, x);
}

double regularized_gamma_q(double a, double x) {
  check_gamma_args(a, x);
  if (x == 0.0) return 1.0;
  if (x < a + 1.0) return 1.0 - gamma_p_series(a, x);
  return gamma_q_fraction(a, x);
}

double chi_square_sf(double x, std::int64_t dof) {
  if (dof < 1) throw DomainError("chi-square needs dof >= 1");
  if (!(x >= 0.0)) throw DomainError("chi-square statistic must be >= 0");
  if (std::isinf(x)) return 0.0;
  return regularized_gamma_q(0.5 * static_cast<double>(dof), 0.5 * x);
}

double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::numbers::sqrt2); }

double normal_sf(double z) { return 0.5 * std::erfc(z / std::numbers::sqrt2); }

double log_poisson_pmf(double lambda, std::uint64_t k) {
  const auto kd = static_cast<double>(k);
  return kd * std::log(lambda) - lambda - std::lgamma(kd + 1.0);
}

PoissonTails poisson_tail(double lambda, std::uint64_t k) {
  if (!(lambda > 0.0) || std::isinf(lambda)) {
    throw DomainError("Poisson mean must be positive and finite");
  }
  const double pmf = std::exp(log_poisson_pmf(lambda, k));
  const auto kd = static_cast<double>(k);
  // Sum pmf(j)/pmf(k) outward from k over the smaller side.
  double rel = 1.0;
  double sum = 1.0;
  PoissonTails t;
  if (kd <= lambda) {
    for (std::uint64_t j = k; j > 0; --j) {
      rel *= static_cast<double>(j) / lambda;
      sum += rel;
      if (rel < sum * kEpsilon) break;
    }
    t.left = std::min(1.0, pmf * sum);
    t.right = std::min(1.0, 1.0 - t.left + pmf);
  } else {
    for (double j = kd + 1.0;; j += 1.0) {
      rel *= lambda / j;
      sum += rel;
      if (rel < sum * kEpsilon) break;
    }
    t.right = std::min(1.0, pmf * sum);
    t.left = std::min(1.0, 1.0 - t.right + pmf);
  }
  return t;
}

double log_binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return -std::numeric_limits<double>::infinity();
  const auto nd = static_cast<double>(n);
  const auto kd = static_cast<double>(k);
  return std::lgamma(nd + 1.0) - std::lgamma(kd + 1.0) - std::lgamma(nd - kd + 1.0);
}

double discrete_p_value(double left, double right) noexcept {
  if (right < left) return right;
  if (left > 0.5) return 0.5;
  return 1.0 - left;
}

}  // namespace prngbench
