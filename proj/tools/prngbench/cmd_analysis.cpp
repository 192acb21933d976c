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
#include "prngbench/bigcrush_import.hpp"
#include "prngbench/error.hpp"
#include "prngbench/kat.hpp"
#include "prngbench/plot_export.hpp"
#include "prngbench/report_io.hpp"

namespace prngbench::cli {
namespace {

ClassificationPolicy policy_named(const std::string& name) {
  if (name == "default") return ClassificationPolicy{};
  if (name == "strict") return ClassificationPolicy::strict();
  throw ParameterError("unknown policy '" + name + "' (expected default or strict)");
}

// ---------------------------------------------------------------- aggregate

struct AggregateOptions {
  std::vector<std::string> reports;
  std::string bigcrush;
  std::string generator;
  std::string label;
  std::string policy = "default";
  std::string csv;
  std::string histogram;
  std::string profile;
  std::optional<double> rate_cap;
};

int run_aggregate(const AggregateOptions& o) {
  const ClassificationPolicy policy = policy_named(o.policy);
  std::vector<AggregateReport> rows;
  for (const auto& path : o.reports) {
    const ReportFile f = load_report_file(path);
    if (f.reports.empty()) throw DomainError(path + " holds no stream reports");
    rows.push_back(aggregate(f.reports, policy, o.label));
  }
  if (!o.bigcrush.empty()) {
    if (o.generator.empty()) throw ParameterError("--bigcrush needs --generator");
    const auto summaries = load_bigcrush_summaries(o.bigcrush);
    if (summaries.empty()) throw DomainError(o.bigcrush + " holds no battery summaries");
    const auto reports = bigcrush_reports(summaries, parse_generator_kind(o.generator), policy);
    rows.push_back(aggregate(reports, policy, o.label));
  }
  if (rows.empty()) throw ParameterError("nothing to aggregate");

  char line[200];
  std::snprintf(line, sizeof line, "%-16s %8s %14s %14s %10s\n", "generator", "streams",
                "avg_suspicious", "avg_extreme", "distinct");
  std::cout << line;
  for (const auto& a : rows) {
    std::snprintf(line, sizeof line, "%-16s %8llu %14.6f %14.6f %10zu\n", a.generator.c_str(),
                  static_cast<unsigned long long>(a.total_streams), a.avg_failures_suspicious,
                  a.avg_failures_extreme, a.distinct_failed_tests.size());
    std::cout << line;
  }

  if (!o.csv.empty()) {
    Output out(o.csv);
    write_aggregate_csv(out.stream(), rows);
    out.close();
  }
  if ((!o.histogram.empty() || !o.profile.empty()) && rows.size() != 1) {
    throw ParameterError("--histogram and --profile need exactly one input");
  }
  if (!o.histogram.empty()) {
    Output out(o.histogram);
    write_histogram_tsv(out.stream(), rows.front());
    out.close();
  }
  if (!o.profile.empty()) {
    Output out(o.profile);
    write_profile_tsv(out.stream(), rows.front(), o.rate_cap);
    out.close();
  }
  return kExitOk;
}

// ---------------------------------------------------------------- diff

struct DiffOptions {
  std::string a;
  std::string b;
  bool profiles = false;
  std::string policy = "default";
  double threshold = 0.05;
  std::uint64_t min_streams = 30;
  bool check = false;
};

int diff_dumps(const DiffOptions& o) {
  const StreamDiff d = diff_streams(o.a, o.b);
  std::cout << "words " << d.words_a << " / " << d.words_b << ", compared " << d.compared << '\n';
  if (d.equal) {
    std::cout << "equal\n";
  } else {
    std::cout << "diverge at word " << *d.divergence;
    if (d.word_a && d.word_b) {
      char buf[64];
      std::snprintf(buf, sizeof buf, ": %08x vs %08x", *d.word_a, *d.word_b);
      std::cout << buf;
    } else {
      std::cout << ": one stream ends";
    }
    std::cout << '\n';
  }
  return o.check && !d.equal ? kExitCheck : kExitOk;
}

int diff_profiles(const DiffOptions& o) {
  const ClassificationPolicy policy = policy_named(o.policy);
  auto load = [&](const std::string& path) {
    const ReportFile f = load_report_file(path);
    if (f.reports.empty()) throw DomainError(path + " holds no stream reports");
    return aggregate(f.reports, policy);
  };
  const AggregateReport a = load(o.a);
  const AggregateReport b = load(o.b);
  const ProfileDiff d =
      profile_diff(a, b, ProfileDiffOptions{.threshold = o.threshold, .min_streams = o.min_streams});
  std::cout << "a: " << a.generator << " (" << a.total_streams << " streams), b: " << b.generator
            << " (" << b.total_streams << " streams)\n";
  for (const auto& id : d.only_a) std::cout << "only a  " << id.label() << '\n';
  for (const auto& id : d.only_b) std::cout << "only b  " << id.label() << '\n';
  char line[160];
  for (const auto& [id, delta] : d.rate_delta) {
    std::snprintf(line, sizeof line, "delta   %-26s %+.4f%s\n", id.label().c_str(), delta,
                  d.anomalies.contains(id) ? "  ANOMALY" : "");
    std::cout << line;
  }
  if (d.empty()) std::cout << "profiles identical\n";
  return o.check && !d.anomalies.empty() ? kExitCheck : kExitOk;
}

// ---------------------------------------------------------------- headroom

struct HeadroomOptions {
  std::string state;
  std::string battery = "bigcrush";
  bool check = false;
};

int run_headroom(const HeadroomOptions& o) {
  int bits = 0;
  try {
    bits = state_bits(parse_generator_kind(o.state));
  } catch (const ParameterError&) {
    std::size_t used = 0;
    try {
      bits = std::stoi(o.state, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != o.state.size()) {
      throw ParameterError("'" + o.state + "' is neither a bit count nor a generator name");
    }
  }
  const BatteryScale scale = parse_battery_scale(o.battery);
  const int h = headroom(bits, scale);
  std::cout << h << '\n';
  if (h < 0) {
    std::cerr << "insufficient state: " << bits << " bits, " << to_string(scale) << " needs "
              << headroom_threshold(scale) << '\n';
  }
  return o.check && h < 0 ? kExitCheck : kExitOk;
}

}  // namespace

void add_aggregate_command(CLI::App& app, Action& action) {
  auto opts = std::make_shared<AggregateOptions>();
  auto* cmd = app.add_subcommand("aggregate", "Summarize campaign report files");
  cmd->add_option("reports", opts->reports, "Report files; one summary row each")
      ->check(CLI::ExistingFile);
  cmd->add_option("--bigcrush", opts->bigcrush,
                  "TestU01 summary file or directory, aggregated as one more row")
      ->check(CLI::ExistingPath);
  cmd->add_option("-g,--generator", opts->generator, "Generator of the --bigcrush summaries");
  cmd->add_option("--label", opts->label, "Row label instead of the generator name");
  cmd->add_option("--policy", opts->policy, "default or strict")->capture_default_str();
  cmd->add_option("--csv", opts->csv, "Write the summary rows as CSV");
  cmd->add_option("--histogram", opts->histogram, "Write the failures-per-stream histogram TSV");
  cmd->add_option("--profile", opts->profile, "Write the per-test failure-rate TSV");
  cmd->add_option("--rate-cap", opts->rate_cap, "Clip plotted rates in --profile")
      ->check(CLI::Range(0.0, 1.0));
  cmd->callback([opts, &action] { action = [opts] { return run_aggregate(*opts); }; });
}

void add_diff_command(CLI::App& app, Action& action) {
  auto opts = std::make_shared<DiffOptions>();
  auto* cmd = app.add_subcommand("diff", "Compare two word dumps or two failure profiles");
  cmd->add_option("a", opts->a, "First file")->required()->check(CLI::ExistingFile);
  cmd->add_option("b", opts->b, "Second file")->required()->check(CLI::ExistingFile);
  cmd->add_flag("--profiles", opts->profiles, "Inputs are campaign report files");
  cmd->add_option("--policy", opts->policy, "default or strict")->capture_default_str();
  cmd->add_option("--threshold", opts->threshold, "Anomaly threshold on failure rates")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  cmd->add_option("--min-streams", opts->min_streams, "Streams per side before flagging")
      ->capture_default_str();
  cmd->add_flag("--check", opts->check, "Exit 4 on divergence or anomalies");
  cmd->callback([opts, &action] {
    action = [opts] { return opts->profiles ? diff_profiles(*opts) : diff_dumps(*opts); };
  });
}

void add_headroom_command(CLI::App& app, Action& action) {
  auto opts = std::make_shared<HeadroomOptions>();
  auto* cmd = app.add_subcommand("headroom", "State bits beyond what a battery needs");
  cmd->add_option("state", opts->state, "State size in bits, or a generator name")->required();
  cmd->add_option("battery", opts->battery, "smallcrush, crush or bigcrush")
      ->capture_default_str();
  cmd->add_flag("--check", opts->check, "Exit 4 when the headroom is negative");
  cmd->callback([opts, &action] { action = [opts] { return run_headroom(*opts); }; });
}

}  // namespace prngbench::cli
