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

#ifndef PRNGBENCH_BATTERY_CONFIG_HPP_
#define PRNGBENCH_BATTERY_CONFIG_HPP_

// YAML battery and campaign configuration files (schema 1).
//
// Battery file:
//
//   schema: 1
//   name: my-battery
//   budget: 1073741824          # optional word ceiling per stream
//   policy:                     # optional
//     suspicious_low: 0.001
//     suspicious_high: 0.999
//     extreme_eps: 1.0e-15
//   preset: desk                # or a tests: list
//   tests:
//     - family: SerialOver
//       variant: 0
//       bigcrush: [1]
//       n: 4194304
//       t: 2
//       d: 64
//       bit_offset: 0           # optional, default 0
//       bit_count: 32           # optional, default 32 - bit_offset
//
// Campaign file: a campaign: block plus the battery keys under battery:
//
//   schema: 1
//   campaign:
//     generator: pcg32
//     streams: 32
//     master_seed: 0x5eed
//     parallelism: 4
//   battery:
//     preset: desk

#include <filesystem>
#include <string_view>

#include "prngbench/battery.hpp"
#include "prngbench/harness.hpp"

namespace prngbench {

inline constexpr int kConfigSchemaVersion = 1;

// Throw ConfigError (with the 1-based line when known) on any problem,
// including parameter errors in the listed tests.
BatteryConfig parse_battery_config(std::string_view yaml);
BatteryConfig load_battery_config(const std::filesystem::path& path);

HarnessConfig parse_campaign_config(std::string_view yaml);
HarnessConfig load_campaign_config(const std::filesystem::path& path);

}  // namespace prngbench

#endif  // PRNGBENCH_BATTERY_CONFIG_HPP_
