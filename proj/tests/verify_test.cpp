// Copyright 2026 The hq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hq/verify.hpp"

#include <gtest/gtest.h>

#include <set>
#include <stdexcept>
#include <string>

namespace hq {
namespace {

VerifyConfig small_config() {
  VerifyConfig c;
  c.samples = 5000;
  c.cc_targets = 3;
  return c;
}

TEST(RunVerify, SmallConfigPasses) {
  const VerifyReport report = run_verify(small_config());
  for (const auto& c : report.checks) {
    EXPECT_NE(c.status, CheckStatus::Fail) << c.name << " measured " << c.measured;
  }
  EXPECT_TRUE(report.passed());
}

TEST(RunVerify, BoxHomogeneityIsExpectedFailure) {
  VerifyConfig c = small_config();
  c.modules = {"norms"};
  const VerifyReport report = run_verify(c);
  const VerifyCheck* box = report.find("norms.box_homogeneity");
  ASSERT_NE(box, nullptr);
  EXPECT_EQ(box->status, CheckStatus::ExpectedFailure);
  EXPECT_TRUE(report.passed());
  EXPECT_NE(report.find("norms.quasi_triangle_sup.koranyi"), nullptr);
}

TEST(RunVerify, ModuleFilter) {
  VerifyConfig c = small_config();
  c.modules = {"ops", "quaternion"};
  const VerifyReport report = run_verify(c);
  ASSERT_FALSE(report.checks.empty());
  for (const auto& check : report.checks) {
    const bool allowed =
        check.name.rfind("ops.", 0) == 0 || check.name.rfind("quaternion.", 0) == 0;
    EXPECT_TRUE(allowed) << check.name;
  }
}

TEST(RunVerify, CheckNamesAreUnique) {
  const VerifyReport report = run_verify(small_config());
  std::set<std::string> names;
  for (const auto& c : report.checks) EXPECT_TRUE(names.insert(c.name).second) << c.name;
}

TEST(RunVerify, InvalidConfigThrows) {
  VerifyConfig zero = small_config();
  zero.samples = 0;
  EXPECT_THROW(run_verify(zero), std::invalid_argument);
  VerifyConfig no_n = small_config();
  no_n.n = 0;
  EXPECT_THROW(run_verify(no_n), std::invalid_argument);
  VerifyConfig unknown = small_config();
  unknown.modules = {"geometry"};
  EXPECT_THROW(run_verify(unknown), std::invalid_argument);
}

TEST(RunVerify, ReportIsReproducible) {
  VerifyConfig c = small_config();
  c.modules = {"norms", "equivalence"};
  EXPECT_EQ(dump(run_verify(c).to_json()), dump(run_verify(c).to_json()));
}

TEST(VerifyReport, JsonShape) {
  VerifyConfig c = small_config();
  c.modules = {"group"};
  const Json j = run_verify(c).to_json();
  ASSERT_TRUE(j.contains("checks"));
  for (const auto& check : j["checks"]) {
    EXPECT_TRUE(check.contains("name"));
    EXPECT_TRUE(check.contains("status"));
    EXPECT_TRUE(check.contains("measured"));
    EXPECT_TRUE(check.contains("tolerance"));
  }
}

TEST(VerifyReport, FailedCheckFailsReport) {
  VerifyReport report;
  report.checks.push_back({"x.ok", CheckStatus::Pass, 0, 1, "", std::nullopt});
  report.checks.push_back({"x.bad", CheckStatus::Fail, 2, 1, "", std::nullopt});
  EXPECT_FALSE(report.passed());
  EXPECT_NE(report.to_text().find("FAILED"), std::string::npos);
  EXPECT_EQ(report.find("x.missing"), nullptr);
}

}  // namespace
}  // namespace hq
