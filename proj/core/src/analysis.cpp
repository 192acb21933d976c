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

#include "prngbench/analysis.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

#include "prngbench/error.hpp"

namespace prngbench {

AggregateReport aggregate(const std::vector<BatteryReport>& reports,
                          const ClassificationPolicy& policy, std::string label) {
  if (reports.empty()) throw DomainError("cannot aggregate an empty report list");
  policy.validate();
  const BatteryReport& first = reports.front();
  AggregateReport agg;
  agg.generator = label.empty() ? std::string(to_string(first.kind)) : std::move(label);
  agg.fingerprint = first.fingerprint;
  agg.total_streams = reports.size();

  std::map<TestId, std::uint64_t> fail_counts;
  std::uint64_t sum_suspicious = 0;
  std::uint64_t sum_extreme = 0;
  for (const auto& r : reports) {
    if (r.fingerprint != first.fingerprint) {
      throw MismatchError("reports mix battery fingerprints " + first.fingerprint + " and " +
                          r.fingerprint);
    }
    if (r.kind != first.kind) {
      throw MismatchError("reports mix generators " + std::string(to_string(first.kind)) +
                          " and " + std::string(to_string(r.kind)));
    }
    std::uint64_t failing = 0;
    for (const auto& t : r.results) {
      const Classification c = classify(t.p_value.value(), policy);
      auto& count = fail_counts[t.id];
      if (c != Classification::Pass) {
        ++failing;
        ++count;
        agg.distinct_failed_tests.insert(t.id);
      }
      if (c == Classification::ExtremeFail) ++sum_extreme;
    }
    sum_suspicious += failing;
    ++agg.histogram[failing];
  }
  const auto n = static_cast<double>(reports.size());
  agg.avg_failures_suspicious = static_cast<double>(sum_suspicious) / n;
  agg.avg_failures_extreme = static_cast<double>(sum_extreme) / n;
  for (const auto& [id, count] : fail_counts) {
    agg.per_test_failure_rate[id] = static_cast<double>(count) / n;
  }
  return agg;
}

std::set<TestId> distinct_failures(const std::vector<BatteryReport>& reports) {
  std::set<TestId> out;
  for (const auto& r : reports) {
    for (const auto& t : r.results) {
      if (t.classification != Classification::Pass) out.insert(t.id);
    }
  }
  return out;
}

ProfileDiff profile_diff(const AggregateReport& a, const AggregateReport& b,
                         const ProfileDiffOptions& options) {
  if (a.fingerprint != b.fingerprint) {
    throw MismatchError("cannot compare profiles of different batteries");
  }
  ProfileDiff d;
  std::set_difference(a.distinct_failed_tests.begin(), a.distinct_failed_tests.end(),
                      b.distinct_failed_tests.begin(), b.distinct_failed_tests.end(),
                      std::inserter(d.only_a, d.only_a.end()));
  std::set_difference(b.distinct_failed_tests.begin(), b.distinct_failed_tests.end(),
                      a.distinct_failed_tests.begin(), a.distinct_failed_tests.end(),
                      std::inserter(d.only_b, d.only_b.end()));
  std::set<TestId> ids;
  for (const auto& [id, rate] : a.per_test_failure_rate) ids.insert(id);
  for (const auto& [id, rate] : b.per_test_failure_rate) ids.insert(id);
  const bool enough = a.total_streams >= options.min_streams && b.total_streams >= options.min_streams;
  for (const auto& id : ids) {
    const auto ia = a.per_test_failure_rate.find(id);
    const auto ib = b.per_test_failure_rate.find(id);
    const double ra = ia == a.per_test_failure_rate.end() ? 0.0 : ia->second;
    const double rb = ib == b.per_test_failure_rate.end() ? 0.0 : ib->second;
    const double delta = ra - rb;
    if (delta != 0.0) d.rate_delta[id] = delta;
    if (enough && std::fabs(delta) > options.threshold) d.anomalies.insert(id);
  }
  return d;
}

double multiple_testing_expectation(std::uint64_t test_count, double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("alpha must lie in (0, 1)");
  if (test_count == 0) return 0.0;
  return -std::expm1(static_cast<double>(test_count) * std::log1p(-alpha));
}

std::string_view to_string(BatteryScale b) noexcept {
  switch (b) {
    case BatteryScale::SmallCrush:
      return "SmallCrush";
    case BatteryScale::Crush:
      return "Crush";
    case BatteryScale::BigCrush:
      return "BigCrush";
  }
  return "Unknown";
}

BatteryScale parse_battery_scale(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "smallcrush") return BatteryScale::SmallCrush;
  if (lower == "crush") return BatteryScale::Crush;
  if (lower == "bigcrush") return BatteryScale::BigCrush;
  throw ParameterError("unknown battery '" + std::string(name) +
                       "' (expected smallcrush, crush or bigcrush)");
}

int headroom_threshold(BatteryScale b) noexcept {
  switch (b) {
    case BatteryScale::SmallCrush:
      return 32;
    case BatteryScale::Crush:
      return 35;
    case BatteryScale::BigCrush:
      return 36;
  }
  return 0;
}

int headroom(int state_bits, BatteryScale b) {
  if (state_bits < 1) throw DomainError("state_bits must be >= 1");
  return state_bits - headroom_threshold(b);
}

}  // namespace prngbench
