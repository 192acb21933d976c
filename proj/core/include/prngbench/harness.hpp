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

#ifndef PRNGBENCH_HARNESS_HPP_
#define PRNGBENCH_HARNESS_HPP_

// Multi-stream campaigns: many independently seeded streams of one generator,
// each run through the same battery.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "prngbench/battery.hpp"
#include "prngbench/generators.hpp"

namespace prngbench {

struct HarnessConfig {
  GeneratorKind kind = GeneratorKind::Mt19937;
  std::uint64_t stream_count = 1;
  std::uint64_t master_seed = 0;
  BatteryConfig battery;
  unsigned parallelism = 1;
  // Off by default so that report files are byte-reproducible.
  bool record_timing = false;
};

struct BatteryReport {
  std::uint64_t index = 0;  // position in the seed list
  GeneratorKind kind = GeneratorKind::Mt19937;
  std::uint64_t seed = 0;
  std::string fingerprint;
  std::vector<TestResult> results;
  std::optional<double> wall_seconds;

  friend bool operator==(const BatteryReport&, const BatteryReport&) = default;
};

struct StreamFailure {
  std::uint64_t index = 0;
  std::uint64_t seed = 0;
  std::string message;
};

struct CampaignOutcome {
  std::vector<BatteryReport> reports;  // successful streams, by index
  std::vector<StreamFailure> failures;
  bool complete = true;
};

// count pairwise-distinct seeds from a splitmix64 sequence started at
// master_seed, skipping repeats. Throws ParameterError for count == 0.
std::vector<std::uint64_t> derive_seeds(std::uint64_t master_seed, std::uint64_t count);

// Runs the battery on stream_from_seed(kind, seed).
BatteryReport run_stream(GeneratorKind kind, std::uint64_t seed, std::uint64_t index,
                         const BatteryConfig& battery, bool record_timing = false);

// Called after each finished stream with (done, total); may run on a worker
// thread but never concurrently with itself.
using ProgressFn = std::function<void(std::uint64_t, std::uint64_t)>;

// Validates the configuration and the budget up front (throwing before any
// stream runs), then runs every stream on `parallelism` threads. A stream
// that throws is recorded as a failure; the others still complete.
CampaignOutcome run_campaign(const HarnessConfig& config, const ProgressFn& progress = {});

}  // namespace prngbench

#endif  // PRNGBENCH_HARNESS_HPP_
