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

#ifndef PRNGBENCH_TOOLS_CLI_COMMON_HPP_
#define PRNGBENCH_TOOLS_CLI_COMMON_HPP_

#include <CLI11.hpp>

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <memory>
#include <string>

#include "prngbench/battery.hpp"

namespace prngbench::cli {

// Process exit codes.
enum ExitCode : int {
  kExitOk = 0,
  kExitInternal = 1,
  kExitUsage = 2,     // bad flags, unknown names, budget refusals
  kExitIo = 3,        // unreadable input, unwritable output
  kExitCheck = 4,     // --check found failures, KAT mismatch
  kExitData = 5,      // malformed config, report, dump or summary data
};

inline constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 30;

// Set by the parsed subcommand; main runs it after parsing succeeds.
using Action = std::function<int()>;

void add_gen_command(CLI::App& app, Action& action);
void add_battery_command(CLI::App& app, Action& action);
void add_campaign_command(CLI::App& app, Action& action);
void add_aggregate_command(CLI::App& app, Action& action);
void add_diff_command(CLI::App& app, Action& action);
void add_kat_command(CLI::App& app, Action& action);
void add_headroom_command(CLI::App& app, Action& action);

// --budget with the 2^38 ceiling.
CLI::Option* add_budget_option(CLI::App& cmd, std::uint64_t& budget);

// "-" is standard output. Throws IoError.
class Output {
 public:
  explicit Output(const std::string& path, bool binary = false);
  ~Output();
  std::ostream& stream() noexcept { return *out_; }
  // Flushes and reports write errors as IoError.
  void close();

 private:
  std::string path_;
  std::unique_ptr<std::ostream> owned_;
  std::ostream* out_;
};

// p-values as BigCrush prints them: "eps", "1 - eps1", or 4 significant digits.
std::string format_p(double p);

// Shortest round-trip decimal.
std::string format_double(double v);

// Applies --budget on top of the battery's own ceiling; BudgetError when the
// battery needs more.
void apply_budget(BatteryConfig& battery, std::uint64_t budget);

// Maps library exceptions to exit codes and prints them to stderr.
int run_guarded(const Action& action);

}  // namespace prngbench::cli

#endif  // PRNGBENCH_TOOLS_CLI_COMMON_HPP_
