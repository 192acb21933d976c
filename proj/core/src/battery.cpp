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

#include "prngbench/battery.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <nlohmann/json.hpp>
#include <set>
#include <utility>

#include "prngbench/birthday_spacings.hpp"
#include "prngbench/close_pairs.hpp"
#include "prngbench/collision_over.hpp"
#include "prngbench/error.hpp"
#include "prngbench/linear_comp.hpp"
#include "prngbench/random_walk.hpp"
#include "prngbench/serial_over.hpp"

namespace prngbench {
namespace {

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) noexcept {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) {
    return std::numeric_limits<std::uint64_t>::max();
  }
  return a * b;
}

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) noexcept {
  return a > std::numeric_limits<std::uint64_t>::max() - b
             ? std::numeric_limits<std::uint64_t>::max()
             : a + b;
}

std::size_t statistics_per_test(TestFamily f) {
  switch (f) {
    case TestFamily::RandomWalk:
      return 5;
    case TestFamily::LinearComp:
      return 2;
    default:
      return 1;
  }
}

TestSpec make_spec(TestFamily family, int variant, std::vector<int> bigcrush, TestParams p) {
  TestSpec s;
  s.id.family = family;
  s.id.variant_index = variant;
  s.id.bigcrush_indices = std::move(bigcrush);
  s.params = p;
  return s;
}

BitSlice from_offset(int r) { return BitSlice{r, 32 - r}; }

}  // namespace

void validate(const TestSpec& spec) {
  const TestParams& p = spec.params;
  switch (spec.id.family) {
    case TestFamily::SerialOver:
      return validate_serial_over(p);
    case TestFamily::CollisionOver:
      return validate_collision_over(p);
    case TestFamily::BirthdaySpacings:
      return validate_birthday_spacings(p);
    case TestFamily::ClosePairs:
      return validate_close_pairs(p);
    case TestFamily::RandomWalk:
      return validate_random_walk(p);
    case TestFamily::LinearComp:
      return validate_linear_comp(p);
    case TestFamily::External:
      break;
  }
  throw ParameterError("external results cannot be run as a battery test");
}

void validate(const BatteryConfig& config) {
  config.policy.validate();
  if (config.budget == 0) throw ParameterError("budget must be positive");
  std::set<std::pair<TestFamily, int>> seen;
  for (const auto& spec : config.tests) {
    if (!seen.emplace(spec.id.family, spec.id.variant_index).second) {
      throw ParameterError("duplicate test " + spec.id.label());
    }
    try {
      validate(spec);
    } catch (const ParameterError& e) {
      throw ParameterError(spec.id.label() + ": " + e.what());
    }
  }
}

std::uint64_t words_required(const TestSpec& spec) {
  const TestParams& p = spec.params;
  const auto t = static_cast<std::uint64_t>(std::max(p.t, 0));
  switch (spec.id.family) {
    case TestFamily::SerialOver:
    case TestFamily::CollisionOver:
      return p.n;
    case TestFamily::BirthdaySpacings:
    case TestFamily::ClosePairs:
      return saturating_mul(p.n, t);
    case TestFamily::RandomWalk:
      return saturating_mul(p.n, p.walk_length);
    case TestFamily::LinearComp:
      return p.L_bits;
    case TestFamily::External:
      break;
  }
  return 0;
}

std::uint64_t words_required(const BatteryConfig& config) {
  std::uint64_t total = 0;
  for (const auto& spec : config.tests) total = saturating_add(total, words_required(spec));
  return total;
}

std::size_t result_count(const BatteryConfig& config) {
  std::size_t n = 0;
  for (const auto& spec : config.tests) n += statistics_per_test(spec.id.family);
  return n;
}

TestOutcome run_statistics(const TestSpec& spec, WordSource& src) {
  switch (spec.id.family) {
    case TestFamily::SerialOver:
      return serial_over(src, spec.params);
    case TestFamily::CollisionOver:
      return collision_over(src, spec.params);
    case TestFamily::BirthdaySpacings:
      return birthday_spacings(src, spec.params);
    case TestFamily::ClosePairs:
      return close_pairs(src, spec.params);
    case TestFamily::RandomWalk:
      return random_walk(src, spec.params);
    case TestFamily::LinearComp:
      return linear_comp(src, spec.params);
    case TestFamily::External:
      break;
  }
  throw ParameterError("external results cannot be run as a battery test");
}

std::vector<TestResult> run_test(const TestSpec& spec, WordSource& src,
                                 const ClassificationPolicy& policy) {
  const TestOutcome outcome = run_statistics(spec, src);
  std::vector<TestResult> results;
  results.reserve(outcome.statistics.size());
  for (const auto& st : outcome.statistics) {
    TestResult r;
    r.id = spec.id;
    r.id.statistic = st.name;
    r.statistic = st.value;
    r.p_value = PValue(clamp_reported_p(st.p_value));
    r.classification = classify(r.p_value.value(), policy);
    r.samples_consumed = outcome.samples_consumed;
    results.push_back(std::move(r));
  }
  return results;
}

std::vector<TestResult> run_battery(WordSource& src, const BatteryConfig& config) {
  validate(config);
  const std::uint64_t need = words_required(config);
  if (need > config.budget) {
    throw BudgetError("battery '" + config.name + "' needs " + std::to_string(need) +
                      " words, budget is " + std::to_string(config.budget));
  }
  std::vector<TestResult> results;
  results.reserve(result_count(config));
  for (const auto& spec : config.tests) {
    auto part = run_test(spec, src, config.policy);
    std::move(part.begin(), part.end(), std::back_inserter(results));
  }
  return results;
}

std::vector<TestResult> run_battery(const GeneratorState& state, const BatteryConfig& config) {
  GeneratorSource src(state);
  return run_battery(src, config);
}

BatteryConfig desk_preset() {
  BatteryConfig c;
  c.name = "desk";
  using F = TestFamily;
  auto& t = c.tests;
  t.push_back(make_spec(F::SerialOver, 0, {1}, {.n = 1U << 22, .t = 2, .d = 64, .bits = from_offset(0)}));
  t.push_back(make_spec(F::SerialOver, 1, {2}, {.n = 1U << 22, .t = 2, .d = 64, .bits = from_offset(26)}));
  t.push_back(make_spec(F::CollisionOver, 0, {9}, {.n = 1U << 20, .t = 2, .d = 1U << 13, .bits = from_offset(0)}));
  t.push_back(make_spec(F::CollisionOver, 1, {10}, {.n = 1U << 20, .t = 2, .d = 1U << 13, .bits = from_offset(19)}));
  t.push_back(make_spec(F::BirthdaySpacings, 0, {}, {.n = 1U << 16, .t = 2, .d = 1U << 23, .bits = from_offset(0)}));
  t.push_back(make_spec(F::BirthdaySpacings, 1, {}, {.n = 1U << 16, .t = 2, .d = 1U << 23, .bits = from_offset(9)}));
  t.push_back(make_spec(F::ClosePairs, 0, {22}, {.n = 1U << 13, .t = 2, .bits = from_offset(0)}));
  t.push_back(make_spec(F::ClosePairs, 1, {23}, {.n = 1U << 13, .t = 3, .bits = from_offset(0)}));
  t.push_back(make_spec(F::RandomWalk, 0, {74}, {.n = 10000, .walk_length = 64, .bits = from_offset(0)}));
  t.push_back(make_spec(F::RandomWalk, 1, {76}, {.n = 10000, .walk_length = 1024, .bits = from_offset(0)}));
  t.push_back(make_spec(F::LinearComp, 0, {80}, {.L_bits = 50000, .bits = from_offset(0)}));
  t.push_back(make_spec(F::LinearComp, 1, {81}, {.L_bits = 50000, .bits = from_offset(29)}));
  return c;
}

BatteryConfig smoke_preset() {
  BatteryConfig c;
  c.name = "smoke";
  using F = TestFamily;
  auto& t = c.tests;
  t.push_back(make_spec(F::SerialOver, 0, {1}, {.n = 1U << 14, .t = 2, .d = 16, .bits = from_offset(0)}));
  t.push_back(make_spec(F::CollisionOver, 0, {9}, {.n = 1U << 12, .t = 2, .d = 1U << 10, .bits = from_offset(0)}));
  t.push_back(make_spec(F::BirthdaySpacings, 0, {}, {.n = 1U << 10, .t = 2, .d = 1U << 14, .bits = from_offset(0)}));
  t.push_back(make_spec(F::ClosePairs, 0, {22}, {.n = 256, .t = 2, .bits = from_offset(0)}));
  t.push_back(make_spec(F::RandomWalk, 0, {74}, {.n = 1000, .walk_length = 16, .bits = from_offset(0)}));
  t.push_back(make_spec(F::LinearComp, 0, {80}, {.L_bits = 2000, .bits = from_offset(0)}));
  return c;
}

BatteryConfig preset(std::string_view name) {
  if (name == "desk") return desk_preset();
  if (name == "smoke") return smoke_preset();
  throw ParameterError("unknown battery preset '" + std::string(name) + "'");
}

std::string canonical_json(const BatteryConfig& config) {
  nlohmann::ordered_json tests = nlohmann::ordered_json::array();
  for (const auto& s : config.tests) {
    const TestParams& p = s.params;
    tests.push_back({{"family", std::string(to_string(s.id.family))},
                     {"variant", s.id.variant_index},
                     {"bigcrush", s.id.bigcrush_indices},
                     {"n", p.n},
                     {"t", p.t},
                     {"d", p.d},
                     {"walk_length", p.walk_length},
                     {"L_bits", p.L_bits},
                     {"bit_offset", p.bits.offset},
                     {"bit_count", p.bits.count}});
  }
  nlohmann::ordered_json doc = {
      {"policy",
       {{"suspicious_low", config.policy.suspicious_low},
        {"suspicious_high", config.policy.suspicious_high},
        {"extreme_eps", config.policy.extreme_eps}}},
      {"tests", tests}};
  return doc.dump();
}

std::string fingerprint(const BatteryConfig& config) {
  const std::string text = canonical_json(config);
  std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
  unsigned int len = 0;
  if (EVP_Digest(text.data(), text.size(), md.data(), &len, EVP_sha256(), nullptr) != 1) {
    throw Error("SHA-256 digest failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string hex;
  hex.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    hex.push_back(kHex[md[i] >> 4]);
    hex.push_back(kHex[md[i] & 15]);
  }
  return hex;
}

double clamp_reported_p(double p) noexcept {
  if (std::isnan(p)) return p;  // rejected by PValue
  return std::clamp(p, kReportedPMin, kReportedPMax);
}

}  // namespace prngbench
