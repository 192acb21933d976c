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

#ifndef PRNGBENCH_CLASSIFICATION_HPP_
#define PRNGBENCH_CLASSIFICATION_HPP_

#include <cstdint>
#include <string_view>

namespace prngbench {

enum class Classification : std::uint8_t { Pass = 0, Suspicious = 1, ExtremeFail = 2 };

std::string_view to_string(Classification c) noexcept;
Classification parse_classification(std::string_view name);

// Two-sided thresholds. The default flags p outside [0.001, 0.999] as
// suspicious and p within 1e-15 of either end as an extreme failure.
struct ClassificationPolicy {
  double suspicious_low = 0.001;
  double suspicious_high = 0.999;
  double extreme_eps = 1e-15;

  // Only extreme p-values count; for averages of hard failures.
  static constexpr ClassificationPolicy strict() noexcept {
    return ClassificationPolicy{1e-15, 1.0 - 1e-15, 1e-15};
  }

  // Throws ParameterError unless
  //   0 < suspicious_low < suspicious_high < 1,
  //   0 < extreme_eps <= suspicious_low and 1 - extreme_eps >= suspicious_high.
  void validate() const;

  friend bool operator==(const ClassificationPolicy&, const ClassificationPolicy&) = default;
};

Classification classify(double p, const ClassificationPolicy& policy) noexcept;

}  // namespace prngbench

#endif  // PRNGBENCH_CLASSIFICATION_HPP_
