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

#ifndef PRNGBENCH_ACCEPTANCE_CRITERIA_HPP_
#define PRNGBENCH_ACCEPTANCE_CRITERIA_HPP_

// Acceptance criteria. Each check returns a verdict with a one-line detail;
// tolerances and runtime ceilings are pinned next to the check that uses
// them.

#include <chrono>
#include <string>

namespace prngbench::acceptance {

enum class Status { Pass, Fail, NotVerified };

struct Verdict {
  Status status = Status::Fail;
  std::string detail;
};

struct Context {
  std::string cli;  // path of the prngbench binary, empty when not built
  unsigned threads = 1;
};

Verdict check_kat(const Context& ctx);
Verdict check_linear_comp_literal(const Context& ctx);
Verdict check_linear_comp(const Context& ctx);
Verdict check_crush_resistant(const Context& ctx);
Verdict check_multiple_testing(const Context& ctx);
Verdict check_headroom(const Context& ctx);
Verdict check_uniformity(const Context& ctx);
Verdict check_oracles(const Context& ctx);
Verdict check_determinism(const Context& ctx);
Verdict check_published_data(const Context& ctx);
Verdict check_out_of_scope(const Context& ctx);

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

// "%.3g s" style runtime text.
std::string runtime(double seconds);

}  // namespace prngbench::acceptance

#endif  // PRNGBENCH_ACCEPTANCE_CRITERIA_HPP_
