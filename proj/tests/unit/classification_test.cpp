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

#include "prngbench/classification.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "prngbench/error.hpp"
#include "prngbench/test_id.hpp"
#include "prngbench/test_types.hpp"

namespace prngbench {
namespace {

TEST(Classify, Thresholds) {
  const ClassificationPolicy p;
  EXPECT_EQ(classify(0.5, p), Classification::Pass);
  EXPECT_EQ(classify(0.0005, p), Classification::Suspicious);
  EXPECT_EQ(classify(1e-16, p), Classification::ExtremeFail);
  EXPECT_EQ(classify(0.001, p), Classification::Pass);
  EXPECT_EQ(classify(0.999, p), Classification::Pass);
  EXPECT_EQ(classify(0.9995, p), Classification::Suspicious);
  EXPECT_EQ(classify(1e-15, p), Classification::Suspicious);
  EXPECT_EQ(classify(1.0 - 1e-16, p), Classification::ExtremeFail);
  EXPECT_EQ(classify(0.0, p), Classification::ExtremeFail);
  EXPECT_EQ(classify(1.0, p), Classification::ExtremeFail);
}

TEST(Classify, StrictPolicyOnlyFlagsExtremes) {
  const auto s = ClassificationPolicy::strict();
  EXPECT_NO_THROW(s.validate());
  EXPECT_EQ(classify(1e-10, s), Classification::Pass);
  EXPECT_EQ(classify(1e-16, s), Classification::ExtremeFail);
  EXPECT_EQ(classify(1.0 - 1e-16, s), Classification::ExtremeFail);
}

TEST(Classify, MonotoneTowardsBothTails) {
  const ClassificationPolicy p;
  // Moving p away from the centre never moves the verdict towards Pass.
  auto rank = [&](double x) { return static_cast<int>(classify(x, p)); };
  for (double x = 0.5; x > 1e-300; x /= 1.7) {
    EXPECT_GE(rank(x / 1.7), rank(x)) << x;
  }
  for (double e = 0.5; e > 1e-17; e /= 1.7) {
    EXPECT_GE(rank(1.0 - e / 1.7), rank(1.0 - e)) << e;
  }
}

TEST(Policy, Validate) {
  EXPECT_NO_THROW(ClassificationPolicy{}.validate());
  EXPECT_THROW((ClassificationPolicy{0.1, 0.05, 1e-15}.validate()), ParameterError);
  EXPECT_THROW((ClassificationPolicy{0.0, 0.999, 1e-15}.validate()), ParameterError);
  EXPECT_THROW((ClassificationPolicy{0.001, 1.0, 1e-15}.validate()), ParameterError);
  EXPECT_THROW((ClassificationPolicy{0.001, 0.999, 0.01}.validate()), ParameterError);
  EXPECT_THROW((ClassificationPolicy{0.001, 0.999, 0.0}.validate()), ParameterError);
}

TEST(Names, RoundTrip) {
  for (auto c : {Classification::Pass, Classification::Suspicious, Classification::ExtremeFail}) {
    EXPECT_EQ(parse_classification(to_string(c)), c);
  }
  EXPECT_THROW(parse_classification("Maybe"), FormatError);
  for (auto f : {TestFamily::SerialOver, TestFamily::CollisionOver, TestFamily::BirthdaySpacings,
                 TestFamily::ClosePairs, TestFamily::RandomWalk, TestFamily::LinearComp,
                 TestFamily::External}) {
    EXPECT_EQ(parse_test_family(to_string(f)), f);
  }
  EXPECT_THROW(parse_test_family("Gap"), ParameterError);
}

TEST(TestIdType, LabelAndIdentity) {
  TestId a{TestFamily::LinearComp, 1, "Num", {81}};
  EXPECT_EQ(a.label(), "LinearComp[1].Num");
  TestId b{TestFamily::LinearComp, 1, "Num", {}};
  EXPECT_EQ(a, b);
  TestId c{TestFamily::LinearComp, 1, "Size", {81}};
  EXPECT_LT(a, c);
  EXPECT_NE(a, c);
}

TEST(ReportedP, Clamp) {
  EXPECT_EQ(clamp_reported_p(0.0), kReportedPMin);
  EXPECT_EQ(clamp_reported_p(1.0), kReportedPMax);
  EXPECT_EQ(clamp_reported_p(0.25), 0.25);
  EXPECT_TRUE(std::isnan(clamp_reported_p(std::nan(""))));
  EXPECT_EQ(classify(clamp_reported_p(1.0), ClassificationPolicy{}), Classification::ExtremeFail);
  EXPECT_EQ(classify(clamp_reported_p(0.0), ClassificationPolicy{}), Classification::ExtremeFail);
}

}  // namespace
}  // namespace prngbench
