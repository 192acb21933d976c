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

#ifndef PRNGBENCH_ANALYSIS_HPP_
#define PRNGBENCH_ANALYSIS_HPP_

// Cross-stream summaries of campaign reports.

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "prngbench/classification.hpp"
#include "prngbench/harness.hpp"
#include "prngbench/test_id.hpp"

namespace prngbench {

struct AggregateReport {
  std::string generator;
  std::string fingerprint;
  std::uint64_t total_streams = 0;
  // Mean per stream of non-Pass results and of ExtremeFail results.
  double avg_failures_suspicious = 0.0;
  double avg_failures_extreme = 0.0;
  std::set<TestId> distinct_failed_tests;
  // Fraction of streams where the test is non-Pass, for every test seen.
  std::map<TestId, double> per_test_failure_rate;
  // Non-Pass results per stream -> number of streams.
  std::map<std::uint64_t, std::uint64_t> histogram;
};

// Reclassifies every stored p-value with `policy`. Throws MismatchError when
// reports mix generators or battery fingerprints and DomainError when empty.
// An empty label defaults to the generator name.
AggregateReport aggregate(const std::vector<BatteryReport>& reports,
                          const ClassificationPolicy& policy, std::string label = {});

// Tests with a stored non-Pass classification in at least one stream.
std::set<TestId> distinct_failures(const std::vector<BatteryReport>& reports);

struct ProfileDiffOptions {
  double threshold = 0.05;         // absolute rate difference
  std::uint64_t min_streams = 30;  // per side, before an anomaly is flagged
};

struct ProfileDiff {
  std::set<TestId> only_a;  // failed in a, never in b
  std::set<TestId> only_b;
  std::map<TestId, double> rate_delta;  // rate_a - rate_b, nonzero entries
  std::set<TestId> anomalies;

  bool empty() const noexcept {
    return only_a.empty() && only_b.empty() && rate_delta.empty() && anomalies.empty();
  }
};

// Throws MismatchError when the fingerprints differ.
ProfileDiff profile_diff(const AggregateReport& a, const AggregateReport& b,
                         const ProfileDiffOptions& options = {});

// 1 - (1 - alpha)^test_count. Throws DomainError unless 0 < alpha < 1.
double multiple_testing_expectation(std::uint64_t test_count, double alpha);

enum class BatteryScale { SmallCrush, Crush, BigCrush };

std::string_view to_string(BatteryScale b) noexcept;
BatteryScale parse_battery_scale(std::string_view name);

// Minimum state bits a generator needs to pass each battery: 32, 35, 36.
int headroom_threshold(BatteryScale b) noexcept;

// state_bits - threshold; negative means insufficient state.
// Throws DomainError for state_bits < 1.
int headroom(int state_bits, BatteryScale b);

}  // namespace prngbench

#endif  // PRNGBENCH_ANALYSIS_HPP_
