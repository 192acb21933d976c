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

#include "prngbench/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <thread>
#include <unordered_set>

#include "prngbench/error.hpp"

namespace prngbench {

std::vector<std::uint64_t> derive_seeds(std::uint64_t master_seed, std::uint64_t count) {
  if (count == 0) throw ParameterError("seed count must be positive");
  SplitMix64 sm(master_seed);
  std::vector<std::uint64_t> seeds;
  seeds.reserve(count);
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(count);
  while (seeds.size() < count) {
    const std::uint64_t s = sm.next();
    if (seen.insert(s).second) seeds.push_back(s);
  }
  return seeds;
}

BatteryReport run_stream(GeneratorKind kind, std::uint64_t seed, std::uint64_t index,
                         const BatteryConfig& battery, bool record_timing) {
  BatteryReport r;
  r.index = index;
  r.kind = kind;
  r.seed = seed;
  r.fingerprint = fingerprint(battery);
  const auto start = std::chrono::steady_clock::now();
  r.results = run_battery(stream_from_seed(kind, seed), battery);
  if (record_timing) {
    r.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
  return r;
}

CampaignOutcome run_campaign(const HarnessConfig& config, const ProgressFn& progress) {
  if (config.stream_count == 0) throw ParameterError("stream_count must be >= 1");
  if (config.parallelism == 0) throw ParameterError("parallelism must be >= 1");
  validate(config.battery);
  const std::uint64_t need = words_required(config.battery);
  if (need > config.battery.budget) {
    throw BudgetError("battery needs " + std::to_string(need) + " words per stream, budget is " +
                      std::to_string(config.battery.budget));
  }

  const auto seeds = derive_seeds(config.master_seed, config.stream_count);
  const std::size_t total = seeds.size();

  std::vector<std::optional<BatteryReport>> slots(total);
  std::vector<std::optional<std::string>> errors(total);
  std::atomic<std::size_t> next{0};
  std::mutex progress_mu;
  std::uint64_t done = 0;

  auto worker = [&] {
    for (std::size_t i = next.fetch_add(1); i < total; i = next.fetch_add(1)) {
      try {
        slots[i] = run_stream(config.kind, seeds[i], i, config.battery, config.record_timing);
      } catch (const std::exception& e) {
        errors[i] = e.what();
      }
      if (progress) {
        std::lock_guard lock(progress_mu);
        progress(++done, total);
      }
    }
  };

  const unsigned threads =
      static_cast<unsigned>(std::min<std::uint64_t>(config.parallelism, total));
  std::vector<std::thread> pool;
  pool.reserve(threads > 0 ? threads - 1 : 0);
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  CampaignOutcome out;
  for (std::size_t i = 0; i < total; ++i) {
    if (slots[i]) {
      out.reports.push_back(std::move(*slots[i]));
    } else {
      out.failures.push_back({i, seeds[i], errors[i].value_or("unknown error")});
      out.complete = false;
    }
  }
  return out;
}

}  // namespace prngbench
