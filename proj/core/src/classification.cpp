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

#include "prngbench/classification.hpp"

#include <string>

#include "prngbench/error.hpp"

namespace prngbench {

std::string_view to_string(Classification c) noexcept {
  switch (c) {
    case Classification::Pass:
      return "Pass";
    case Classification::Suspicious:
      return "Suspicious";
    case Classification::ExtremeFail:
      return "ExtremeFail";
  }
  return "Unknown";
}

Classification parse_classification(std::string_view name) {
  if (name == "Pass") return Classification::Pass;
  if (name == "Suspicious") return Classification::Suspicious;
  if (name == "ExtremeFail") return Classification::ExtremeFail;
  throw FormatError("unknown classification '" + std::string(name) + "'");
}

void ClassificationPolicy::validate() const {
  if (!(suspicious_low > 0.0 && suspicious_low < suspicious_high && suspicious_high < 1.0)) {
    throw ParameterError("policy needs 0 < suspicious_low < suspicious_high < 1");
  }
  if (!(extreme_eps > 0.0 && extreme_eps <= suspicious_low &&
        1.0 - extreme_eps >= suspicious_high)) {
    throw ParameterError("policy needs 0 < extreme_eps <= suspicious_low");
  }
}

Classification classify(double p, const ClassificationPolicy& policy) noexcept {
  if (p < policy.extreme_eps || p > 1.0 - policy.extreme_eps) {
    return Classification::ExtremeFail;
  }
  if (p < policy.suspicious_low || p > policy.suspicious_high) {
    return Classification::Suspicious;
  }
  return Classification::Pass;
}

}  // namespace prngbench
