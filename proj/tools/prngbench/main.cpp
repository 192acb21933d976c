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

// prngbench: generation, desk-scale batteries, campaigns, analysis and
// known-answer checks. See docs/cli.md for the full reference.

#include <iostream>

#include "cli_common.hpp"

int main(int argc, char** argv) {
  using namespace prngbench::cli;
  CLI::App app{"Desk-scale PRNG stream testing"};
  app.name("prngbench");
  app.require_subcommand(1);
  app.set_version_flag("--version", "prngbench 0.1.0");

  Action action;
  add_gen_command(app, action);
  add_battery_command(app, action);
  add_campaign_command(app, action);
  add_aggregate_command(app, action);
  add_diff_command(app, action);
  add_kat_command(app, action);
  add_headroom_command(app, action);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }
  return run_guarded(action);
}
