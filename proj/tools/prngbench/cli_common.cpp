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

#include "cli_common.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <iostream>

#include "prngbench/error.hpp"

namespace prngbench::cli {

CLI::Option* add_budget_option(CLI::App& cmd, std::uint64_t& budget) {
  return cmd
      .add_option("--budget", budget,
                  "Ceiling on words drawn per stream (default 2^30, at most 2^38)")
      ->check(CLI::Range(std::uint64_t{1}, kMaxBudget))
      ->capture_default_str();
}

Output::Output(const std::string& path, bool binary) : path_(path), out_(&std::cout) {
  if (path != "-") {
    auto mode = std::ios::out | std::ios::trunc;
    if (binary) mode |= std::ios::binary;
    auto f = std::make_unique<std::ofstream>(path, mode);
    if (!*f) throw IoError("cannot write " + path);
    owned_ = std::move(f);
    out_ = owned_.get();
  }
}

Output::~Output() = default;

void Output::close() {
  out_->flush();
  if (!*out_) throw IoError("write failed: " + (path_ == "-" ? "standard output" : path_));
  if (auto* f = dynamic_cast<std::ofstream*>(owned_.get())) {
    f->close();
    if (!*f) throw IoError("write failed: " + path_);
  }
}

std::string format_p(double p) {
  if (p < 1e-300) return "eps";
  if (p < 1e-15) return "eps1";
  if (p > 1.0 - 1e-15) return "1 - eps1";
  char buf[32];
  if (p > 0.99) {
    std::snprintf(buf, sizeof buf, "1 - %.2g", 1.0 - p);
  } else {
    std::snprintf(buf, sizeof buf, "%.4g", p);
  }
  return buf;
}

std::string format_double(double v) {
  char buf[32];
  const auto r = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, r.ptr);
}

void apply_budget(BatteryConfig& battery, std::uint64_t budget) {
  battery.budget = std::min(battery.budget, budget);
  const std::uint64_t need = words_required(battery);
  if (need > battery.budget) {
    throw BudgetError("battery '" + battery.name + "' draws " + std::to_string(need) +
                      " words per stream, above the budget of " +
                      std::to_string(battery.budget) + " (raise --budget)");
  }
}

int run_guarded(const Action& action) {
  try {
    return action();
  } catch (const BudgetError& e) {
    std::cerr << "prngbench: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParameterError& e) {
    std::cerr << "prngbench: " << e.what() << '\n';
    return kExitUsage;
  } catch (const IoError& e) {
    std::cerr << "prngbench: " << e.what() << '\n';
    return kExitIo;
  } catch (const Error& e) {
    std::cerr << "prngbench: " << e.what() << '\n';
    return kExitData;
  } catch (const std::exception& e) {
    std::cerr << "prngbench: internal error: " << e.what() << '\n';
    return kExitInternal;
  }
}

}  // namespace prngbench::cli
