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

#include <cstdio>
#include <iostream>
#include <memory>
#include <optional>

#include "cli_common.hpp"
#include "prngbench/analysis.hpp"
#include "prngbench/battery_config.hpp"
#include "prngbench/error.hpp"
#include "prngbench/harness.hpp"
#include "prngbench/report_io.hpp"

namespace prngbench::cli {
namespace {

BatteryConfig load_battery(const std::string& preset_name, const std::string& config_path) {
  if (!config_path.empty()) return load_battery_config(config_path);
  return preset(preset_name);
}

void write_report(const ReportFile& f, const std::string& path) {
  if (path == "-") {
    Output out(path);
    out.stream() << serialize_report_file(f);
    out.close();
  } else {
    save_report_file(f, path);
  }
}

void print_results(std::ostream& out, const std::vector<TestResult>& results) {
  char line[160];
  std::snprintf(line, sizeof line, "%-26s %-10s %14s  %s\n", "test", "bigcrush", "p-value",
                "verdict");
  out << line;
  for (const auto& r : results) {
    std::string bc;
    for (int i : r.id.bigcrush_indices) bc += (bc.empty() ? "" : ",") + std::to_string(i);
    std::snprintf(line, sizeof line, "%-26s %-10s %14s  %s\n", r.id.label().c_str(),
                  bc.empty() ? "-" : bc.c_str(), format_p(r.p_value).c_str(),
                  std::string(to_string(r.classification)).c_str());
    out << line;
  }
}

// ---------------------------------------------------------------- battery

struct BatteryOptions {
  std::string generator;
  std::uint64_t seed = 0;
  std::string preset = "desk";
  std::string config;
  std::string output;
  std::uint64_t budget = kDefaultBudget;
  bool check = false;
};

int run_battery_cmd(const BatteryOptions& o) {
  const GeneratorKind kind = parse_generator_kind(o.generator);
  BatteryConfig battery = load_battery(o.preset, o.config);
  validate(battery);
  apply_budget(battery, o.budget);

  const BatteryReport report = run_stream(kind, o.seed, 0, battery);
  print_results(o.output == "-" ? std::cerr : std::cout, report.results);

  if (!o.output.empty()) {
    ReportFile f;
    f.header.battery_name = battery.name;
    f.header.fingerprint = report.fingerprint;
    f.header.kind = kind;
    f.header.stream_count = 1;
    f.header.policy = battery.policy;
    f.reports = {report};
    write_report(f, o.output);
  }
  std::size_t extreme = 0;
  for (const auto& r : report.results) extreme += r.classification == Classification::ExtremeFail;
  std::cerr << report.results.size() << " results, " << extreme << " extreme\n";
  return o.check && extreme > 0 ? kExitCheck : kExitOk;
}

// ---------------------------------------------------------------- campaign

struct CampaignOptions {
  std::string config;
  std::string output;
  std::optional<unsigned> parallelism;
  std::optional<std::uint64_t> streams;
  std::optional<std::uint64_t> master_seed;
  std::uint64_t budget = kDefaultBudget;
  bool timing = false;
  bool quiet = false;
  bool check = false;
};

int run_campaign_cmd(const CampaignOptions& o) {
  HarnessConfig h = load_campaign_config(o.config);
  if (o.parallelism) h.parallelism = *o.parallelism;
  if (o.streams) h.stream_count = *o.streams;
  if (o.master_seed) h.master_seed = *o.master_seed;
  if (o.timing) h.record_timing = true;
  apply_budget(h.battery, o.budget);
  // Fail on an unwritable report path before spending the compute.
  if (o.output != "-") Output probe(o.output);
  std::ostream& human = o.output == "-" ? std::cerr : std::cout;

  ProgressFn progress;
  if (!o.quiet) {
    progress = [](std::uint64_t done, std::uint64_t total) {
      std::cerr << "\rstreams " << done << "/" << total << std::flush;
      if (done == total) std::cerr << '\n';
    };
  }
  const CampaignOutcome outcome = run_campaign(h, progress);
  write_report(make_report_file(h, outcome), o.output);

  for (const auto& f : outcome.failures) {
    std::cerr << "stream " << f.index << " (seed " << f.seed << ") failed: " << f.message << '\n';
  }
  if (outcome.reports.empty()) {
    std::cerr << "no stream completed\n";
    return kExitData;
  }
  const AggregateReport agg = aggregate(outcome.reports, h.battery.policy);
  char line[200];
  std::snprintf(line, sizeof line, "%-16s %8s %14s %14s %10s\n", "generator", "streams",
                "avg_suspicious", "avg_extreme", "distinct");
  human << line;
  std::snprintf(line, sizeof line, "%-16s %8llu %14.6f %14.6f %10zu\n", agg.generator.c_str(),
                static_cast<unsigned long long>(agg.total_streams), agg.avg_failures_suspicious,
                agg.avg_failures_extreme, agg.distinct_failed_tests.size());
  human << line;
  if (!agg.distinct_failed_tests.empty()) {
    human << "failure rates:\n";
    for (const auto& id : agg.distinct_failed_tests) {
      std::snprintf(line, sizeof line, "  %-26s %8.4f\n", id.label().c_str(),
                    agg.per_test_failure_rate.at(id));
      human << line;
    }
  }
  if (!outcome.complete) return kExitData;
  return o.check && agg.avg_failures_extreme > 0.0 ? kExitCheck : kExitOk;
}

}  // namespace

void add_battery_command(CLI::App& app, Action& action) {
  auto opts = std::make_shared<BatteryOptions>();
  auto* cmd = app.add_subcommand("battery", "Run the battery on one stream");
  cmd->add_option("-g,--generator", opts->generator, "mt19937, pcg32 or philox4x32_10")
      ->required();
  cmd->add_option("-s,--seed", opts->seed, "Stream seed")->capture_default_str();
  auto* p = cmd->add_option("--preset", opts->preset, "desk or smoke")->capture_default_str();
  cmd->add_option("-c,--config", opts->config, "Battery YAML file")
      ->check(CLI::ExistingFile)
      ->excludes(p);
  cmd->add_option("-o,--output", opts->output, "Write a one-stream report file");
  add_budget_option(*cmd, opts->budget);
  cmd->add_flag("--check", opts->check, "Exit 4 when any result is an extreme failure");
  cmd->callback([opts, &action] { action = [opts] { return run_battery_cmd(*opts); }; });
}

void add_campaign_command(CLI::App& app, Action& action) {
  auto opts = std::make_shared<CampaignOptions>();
  auto* cmd = app.add_subcommand("campaign", "Run a multi-stream campaign from a YAML file");
  cmd->add_option("config", opts->config, "Campaign YAML file")
      ->required()
      ->check(CLI::ExistingFile);
  cmd->add_option("-o,--output", opts->output, "Report file (JSON lines)")->required();
  cmd->add_option("-j,--parallelism", opts->parallelism, "Override worker threads")
      ->check(CLI::Range(1U, 1024U));
  cmd->add_option("--streams", opts->streams, "Override the stream count")
      ->check(CLI::Range(std::uint64_t{1}, std::uint64_t{1} << 32));
  cmd->add_option("--master-seed", opts->master_seed, "Override the master seed");
  add_budget_option(*cmd, opts->budget);
  cmd->add_flag("--timing", opts->timing, "Record per-stream wall time in the report");
  cmd->add_flag("-q,--quiet", opts->quiet, "No progress on standard error");
  cmd->add_flag("--check", opts->check, "Exit 4 when any stream has an extreme failure");
  cmd->callback([opts, &action] { action = [opts] { return run_campaign_cmd(*opts); }; });
}

}  // namespace prngbench::cli
