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

#include "prngbench/battery_config.hpp"

#include <yaml-cpp/yaml.h>

#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "prngbench/error.hpp"

namespace prngbench {
namespace {

std::size_t line_of(const YAML::Node& node) {
  const YAML::Mark m = node.Mark();
  return m.line >= 0 ? static_cast<std::size_t>(m.line) + 1 : 0;
}

[[noreturn]] void fail(const YAML::Node& node, const std::string& message) {
  throw ConfigError(message, line_of(node));
}

void require_map(const YAML::Node& node, const std::string& what) {
  if (!node.IsMap()) fail(node, what + " must be a mapping");
}

void check_keys(const YAML::Node& node, const std::set<std::string>& allowed,
                const std::string& where) {
  for (const auto& kv : node) {
    const auto key = kv.first.as<std::string>();
    if (!allowed.contains(key)) fail(kv.first, "unknown key '" + key + "' in " + where);
  }
}

template <class T>
T scalar(const YAML::Node& node, const std::string& key) {
  if (!node.IsScalar()) fail(node, "'" + key + "' must be a scalar");
  try {
    return node.as<T>();
  } catch (const YAML::Exception&) {
    fail(node, "bad value '" + node.Scalar() + "' for '" + key + "'");
  }
}

template <class T>
T get_or(const YAML::Node& map, const std::string& key, T fallback) {
  const YAML::Node v = map[key];
  return v ? scalar<T>(v, key) : fallback;
}

void check_schema(const YAML::Node& root) {
  const YAML::Node s = root["schema"];
  if (!s) fail(root, "missing 'schema'");
  const int v = scalar<int>(s, "schema");
  if (v != kConfigSchemaVersion) {
    fail(s, "unsupported schema " + std::to_string(v) + " (this build reads " +
                std::to_string(kConfigSchemaVersion) + ")");
  }
}

TestSpec parse_test(const YAML::Node& node, std::map<TestFamily, int>& next_variant) {
  require_map(node, "test entry");
  check_keys(node,
             {"family", "variant", "bigcrush", "n", "t", "d", "walk_length", "L_bits",
              "bit_offset", "bit_count"},
             "test entry");
  TestSpec spec;
  const YAML::Node fam = node["family"];
  if (!fam) fail(node, "test entry needs 'family'");
  try {
    spec.id.family = parse_test_family(scalar<std::string>(fam, "family"));
  } catch (const ParameterError& e) {
    fail(fam, e.what());
  }
  if (spec.id.family == TestFamily::External) fail(fam, "family External cannot be run");
  spec.id.variant_index = get_or<int>(node, "variant", next_variant[spec.id.family]);
  next_variant[spec.id.family] = spec.id.variant_index + 1;
  if (const YAML::Node bc = node["bigcrush"]) {
    if (!bc.IsSequence()) fail(bc, "'bigcrush' must be a list of integers");
    for (const auto& x : bc) spec.id.bigcrush_indices.push_back(scalar<int>(x, "bigcrush"));
  }
  TestParams& p = spec.params;
  p.n = get_or<std::uint64_t>(node, "n", 0);
  p.t = get_or<int>(node, "t", 0);
  p.d = get_or<std::uint64_t>(node, "d", 0);
  p.walk_length = get_or<std::uint64_t>(node, "walk_length", 0);
  p.L_bits = get_or<std::uint64_t>(node, "L_bits", 0);
  p.bits.offset = get_or<int>(node, "bit_offset", 0);
  p.bits.count = get_or<int>(node, "bit_count", 32 - p.bits.offset);
  try {
    validate(spec);
  } catch (const ParameterError& e) {
    fail(node, spec.id.label() + ": " + e.what());
  }
  return spec;
}

BatteryConfig parse_battery_node(const YAML::Node& node, bool nested) {
  require_map(node, nested ? "'battery'" : "battery configuration");
  std::set<std::string> keys{"name", "budget", "policy", "preset", "tests"};
  if (!nested) keys.insert("schema");
  check_keys(node, keys, nested ? "battery" : "battery configuration");

  BatteryConfig cfg;
  const YAML::Node preset_node = node["preset"];
  const YAML::Node tests = node["tests"];
  if (preset_node && tests) fail(tests, "use either 'preset' or 'tests', not both");
  if (!preset_node && !tests) fail(node, "battery needs 'preset' or 'tests'");
  if (preset_node) {
    try {
      cfg = preset(scalar<std::string>(preset_node, "preset"));
    } catch (const ParameterError& e) {
      fail(preset_node, e.what());
    }
  } else {
    if (!tests.IsSequence()) fail(tests, "'tests' must be a list");
    std::set<std::pair<TestFamily, int>> seen;
    std::map<TestFamily, int> next_variant;
    for (const auto& t : tests) {
      TestSpec spec = parse_test(t, next_variant);
      if (!seen.emplace(spec.id.family, spec.id.variant_index).second) {
        fail(t, "duplicate test " + spec.id.label());
      }
      cfg.tests.push_back(std::move(spec));
    }
  }
  cfg.name = get_or<std::string>(node, "name", cfg.name);
  if (const YAML::Node b = node["budget"]) {
    cfg.budget = scalar<std::uint64_t>(b, "budget");
    if (cfg.budget == 0 || cfg.budget > kMaxBudget) fail(b, "budget must be in [1, 2^38]");
  }
  if (const YAML::Node pol = node["policy"]) {
    require_map(pol, "'policy'");
    check_keys(pol, {"suspicious_low", "suspicious_high", "extreme_eps"}, "policy");
    cfg.policy.suspicious_low = get_or<double>(pol, "suspicious_low", cfg.policy.suspicious_low);
    cfg.policy.suspicious_high = get_or<double>(pol, "suspicious_high", cfg.policy.suspicious_high);
    cfg.policy.extreme_eps = get_or<double>(pol, "extreme_eps", cfg.policy.extreme_eps);
    try {
      cfg.policy.validate();
    } catch (const ParameterError& e) {
      fail(pol, e.what());
    }
  }
  return cfg;
}

YAML::Node load_yaml(std::string_view text) {
  try {
    return YAML::Load(std::string(text));
  } catch (const YAML::Exception& e) {
    throw ConfigError(e.msg, e.mark.line >= 0 ? static_cast<std::size_t>(e.mark.line) + 1 : 0);
  }
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

BatteryConfig parse_battery_config(std::string_view yaml) {
  const YAML::Node root = load_yaml(yaml);
  if (!root.IsMap()) throw ConfigError("battery configuration must be a mapping", 1);
  check_schema(root);
  return parse_battery_node(root, false);
}

BatteryConfig load_battery_config(const std::filesystem::path& path) {
  return parse_battery_config(read_file(path));
}

HarnessConfig parse_campaign_config(std::string_view yaml) {
  const YAML::Node root = load_yaml(yaml);
  if (!root.IsMap()) throw ConfigError("campaign configuration must be a mapping", 1);
  check_schema(root);
  check_keys(root, {"schema", "campaign", "battery"}, "campaign configuration");
  const YAML::Node c = root["campaign"];
  if (!c) fail(root, "missing 'campaign'");
  require_map(c, "'campaign'");
  check_keys(c, {"generator", "streams", "master_seed", "parallelism", "record_timing"},
             "campaign");

  HarnessConfig h;
  const YAML::Node g = c["generator"];
  if (!g) fail(c, "campaign needs 'generator'");
  try {
    h.kind = parse_generator_kind(scalar<std::string>(g, "generator"));
  } catch (const ParameterError& e) {
    fail(g, e.what());
  }
  const YAML::Node s = c["streams"];
  if (!s) fail(c, "campaign needs 'streams'");
  h.stream_count = scalar<std::uint64_t>(s, "streams");
  if (h.stream_count == 0) fail(s, "'streams' must be >= 1");
  h.master_seed = get_or<std::uint64_t>(c, "master_seed", 0);
  h.parallelism = get_or<unsigned>(c, "parallelism", 1);
  if (h.parallelism == 0) fail(c["parallelism"], "'parallelism' must be >= 1");
  h.record_timing = get_or<bool>(c, "record_timing", false);

  const YAML::Node b = root["battery"];
  if (!b) fail(root, "missing 'battery'");
  h.battery = parse_battery_node(b, true);
  return h;
}

HarnessConfig load_campaign_config(const std::filesystem::path& path) {
  return parse_campaign_config(read_file(path));
}

}  // namespace prngbench
