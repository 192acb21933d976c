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

#include "cli_common.hpp"
#include "prngbench/kat.hpp"

namespace prngbench::cli {
namespace {

struct KatOptions {
  bool all = false;
  std::vector<std::string> files;
  bool print = false;
  bool verbose = false;
};

int run_kat(const KatOptions& o) {
  if (o.print) {
    Output out("-");
    out.stream() << builtin_kat_text();
    out.close();
    return kExitOk;
  }
  std::vector<std::pair<std::string, std::vector<KatVector>>> sets;
  if (o.all || o.files.empty()) sets.emplace_back("builtin", builtin_kat_vectors());
  for (const auto& f : o.files) sets.emplace_back(f, load_kat_file(f));

  std::size_t total = 0;
  std::size_t failed = 0;
  for (const auto& [source, vectors] : sets) {
    for (const auto& v : vectors) {
      ++total;
      const KatVerdict verdict = verify_kat(v);
      if (verdict.pass) {
        if (o.verbose) std::cout << "ok    " << format_kat(v) << '\n';
        continue;
      }
      ++failed;
      char buf[128];
      std::snprintf(buf, sizeof buf, "word %zu: expected %08x, got %08x",
                    *verdict.mismatch_index, verdict.expected, verdict.actual);
      std::cout << "FAIL  " << source;
      if (v.line > 0) std::cout << ':' << v.line;
      std::cout << "  " << to_string(v.kind) << "  " << buf << '\n';
    }
  }
  std::cout << total - failed << "/" << total << " vectors pass\n";
  return failed == 0 ? kExitOk : kExitCheck;
}

}  // namespace

void add_kat_command(CLI::App& app, Action& action) {
  auto opts = std::make_shared<KatOptions>();
  auto* cmd = app.add_subcommand("kat", "Verify known-answer vectors (exit 4 on a mismatch)");
  cmd->add_flag("--all", opts->all, "Check the built-in golden vectors (default)");
  cmd->add_option("-f,--file", opts->files, "Vector file to check (repeatable)")
      ->check(CLI::ExistingFile);
  cmd->add_flag("--print", opts->print, "Write the built-in vector file to standard output");
  cmd->add_flag("-v,--verbose", opts->verbose, "List passing vectors too");
  cmd->callback([opts, &action] { action = [opts] { return run_kat(*opts); }; });
}

}  // namespace prngbench::cli
