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

#ifndef PRNGBENCH_BATTERY_HPP_
#define PRNGBENCH_BATTERY_HPP_

// The desk-scale battery: configured tests run in declared order on one
// continuing stream.

#include <cstdint>
#include <string>
#include <vector>

#include "prngbench/classification.hpp"
#include "prngbench/generators.hpp"
#include "prngbench/test_types.hpp"
#include "prngbench/word_source.hpp"

namespace prngbench {

inline constexpr std::uint64_t kMaxBudget = std::uint64_t{1} << 38;

struct BatteryConfig {
  std::string name = "custom";
  std::vector<TestSpec> tests;
  ClassificationPolicy policy;
  // Ceiling on words drawn per stream, checked before generating anything.
  std::uint64_t budget = kMaxBudget;
};

// Per-family parameter checks; throws ParameterError.
void validate(const TestSpec& spec);

// Also rejects duplicate (family, variant_index) pairs and bad policies.
void validate(const BatteryConfig& config);

// Exact words a test (or the whole battery) draws; saturates at UINT64_MAX.
std::uint64_t words_required(const TestSpec& spec);
std::uint64_t words_required(const BatteryConfig& config);

// Runs one test without classifying.
TestOutcome run_statistics(const TestSpec& spec, WordSource& src);

// One TestResult per statistic, p-values clamped for reporting.
std::vector<TestResult> run_test(const TestSpec& spec, WordSource& src,
                                 const ClassificationPolicy& policy);

// Validates, checks the budget (BudgetError), then runs every test.
std::vector<TestResult> run_battery(WordSource& src, const BatteryConfig& config);

// Runs on a copy of state.
std::vector<TestResult> run_battery(const GeneratorState& state, const BatteryConfig& config);

// Number of TestResults the battery produces.
std::size_t result_count(const BatteryConfig& config);

// The default battery: two variants of each family, ~21.7M words.
BatteryConfig desk_preset();

// Same families at toy sizes (~50k words), for quick checks.
BatteryConfig smoke_preset();

// Preset by name ("desk", "smoke"); throws ParameterError otherwise.
BatteryConfig preset(std::string_view name);

// Canonical JSON of the tests and the policy (name and budget excluded).
std::string canonical_json(const BatteryConfig& config);

// Lower-case hex SHA-256 of canonical_json.
std::string fingerprint(const BatteryConfig& config);

}  // namespace prngbench

#endif  // PRNGBENCH_BATTERY_HPP_
