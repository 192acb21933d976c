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

#include <array>
#include <cstdio>
#include <limits>
#include <map>
#include <memory>

#include "cli_common.hpp"
#include "prngbench/error.hpp"
#include "prngbench/generators.hpp"

namespace prngbench::cli {
namespace {

enum class WordFormat { RawLe, Hex, UnitReals };

struct GenOptions {
  std::string generator;
  std::uint64_t seed = 0;
  std::uint64_t count = 0;
  std::uint64_t offset = 0;
  WordFormat format = WordFormat::RawLe;
  std::string output = "-";
  std::uint64_t budget = kDefaultBudget;
};

int run_gen(const GenOptions& o) {
  const GeneratorKind kind = parse_generator_kind(o.generator);
  if (o.count > o.budget) {
    throw BudgetError("count " + std::to_string(o.count) + " exceeds the budget of " +
                      std::to_string(o.budget) + " words (raise --budget)");
  }
  GeneratorState state = stream_from_seed(kind, o.seed);
  discard(state, o.offset);

  Output out(o.output, o.format == WordFormat::RawLe);
  std::array<std::uint32_t, 8192> words;
  std::string text;
  std::uint64_t left = o.count;
  while (left > 0) {
    const std::size_t take = left < words.size() ? static_cast<std::size_t>(left) : words.size();
    fill_words(state, std::span(words.data(), take));
    text.clear();
    for (std::size_t i = 0; i < take; ++i) {
      const std::uint32_t w = words[i];
      switch (o.format) {
        case WordFormat::RawLe:
          for (int b = 0; b < 4; ++b) text.push_back(static_cast<char>((w >> (8 * b)) & 0xffU));
          break;
        case WordFormat::Hex: {
          char buf[9];
          std::snprintf(buf, sizeof buf, "%08x", w);
          text.append(buf, 8);
          text.push_back('\n');
          break;
        }
        case WordFormat::UnitReals:
          text += format_double(to_unit_interval(w));
          text.push_back('\n');
          break;
      }
    }
    out.stream().write(text.data(), static_cast<std::streamsize>(text.size()));
    left -= take;
  }
  out.close();
  return kExitOk;
}

}  // namespace

void add_gen_command(CLI::App& app, Action& action) {
  auto opts = std::make_shared<GenOptions>();
  auto* cmd = app.add_subcommand("gen", "Write generator output words");
  cmd->add_option("-g,--generator", opts->generator, "mt19937, pcg32 or philox4x32_10")
      ->required();
  cmd->add_option("-s,--seed", opts->seed, "Stream seed (campaign seeding)")
      ->capture_default_str();
  cmd->add_option("-n,--count", opts->count, "Number of 32-bit words")
      ->required()
      ->check(CLI::Range(std::uint64_t{1}, std::numeric_limits<std::uint64_t>::max()));
  cmd->add_option("--offset", opts->offset, "Words to skip first")->capture_default_str();
  const std::map<std::string, WordFormat> formats{
      {"raw-le", WordFormat::RawLe}, {"hex", WordFormat::Hex}, {"unit-reals", WordFormat::UnitReals}};
  cmd->add_option("-f,--format", opts->format, "raw-le, hex or unit-reals")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case))
      ->default_str("raw-le");
  cmd->add_option("-o,--output", opts->output, "Output file, '-' for standard output")
      ->capture_default_str();
  add_budget_option(*cmd, opts->budget);
  cmd->callback([opts, &action] { action = [opts] { return run_gen(*opts); }; });
}

}  // namespace prngbench::cli
