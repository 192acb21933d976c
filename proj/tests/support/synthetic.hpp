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

#ifndef PRNGBENCH_TESTS_SUPPORT_SYNTHETIC_HPP_
#define PRNGBENCH_TESTS_SUPPORT_SYNTHETIC_HPP_

// Hand-built reports for the analysis and export tests.

#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "prngbench/harness.hpp"

namespace prngbench::synthetic {

inline TestResult result(TestFamily f, int variant, std::string stat, double p,
                         const ClassificationPolicy& policy = {}) {
  TestResult r;
  r.id = TestId{f, variant, std::move(stat), {}};
  r.statistic = 1.0;
  r.p_value = PValue(p);
  r.classification = classify(p, policy);
  r.samples_consumed = 100;
  return r;
}

// One report whose first `failing` of `tests` results sit at p = 1e-5.
inline BatteryReport report(std::uint64_t index, int failing, int tests = 6,
                            GeneratorKind kind = GeneratorKind::Pcg32,
                            std::string fp = "fp") {
  BatteryReport b;
  b.index = index;
  b.kind = kind;
  b.seed = 1000 + index;
  b.fingerprint = std::move(fp);
  for (int i = 0; i < tests; ++i) {
    b.results.push_back(result(TestFamily::SerialOver, i, "X", i < failing ? 1e-5 : 0.5));
  }
  return b;
}

// A per-process scratch directory under the system temp dir.
inline std::filesystem::path scratch_dir(const std::string& name) {
  std::random_device rd;
  auto dir = std::filesystem::temp_directory_path() /
             ("prngbench-" + name + "-" + std::to_string(rd()));
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace prngbench::synthetic

#endif  // PRNGBENCH_TESTS_SUPPORT_SYNTHETIC_HPP_
