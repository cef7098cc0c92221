// Copyright 2026 The eqlc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <nlohmann/json.hpp>

#include "eqlc/report.hpp"
#include "eqlc/suites.hpp"

namespace eqlc {
namespace {

TEST(Report, AgreementAndCounts) {
  VerificationReport r("case");
  EXPECT_TRUE(r.add_agreement("x", {{"a", "1/2"}, {"b", "1/2"}}));
  EXPECT_FALSE(r.add_agreement("y", {{"a", "1/2"}, {"b", "2/4"}}));
  r.add_prediction("z", "formula", "1/24");
  r.add("w", "path", "n/a", Status::kSkip);
  EXPECT_EQ(r.count(Status::kPass), 2u);
  EXPECT_EQ(r.count(Status::kFail), 2u);
  EXPECT_EQ(r.count(Status::kPrediction), 1u);
  EXPECT_EQ(r.count(Status::kSkip), 1u);
  EXPECT_FALSE(r.all_passed());
  EXPECT_EQ(format_rational(Rational(3)), "3/1");
  EXPECT_EQ(format_rational(Rational(-6, 4)), "-3/2");
}

TEST(Report, TsvAndJsonCarryTheSameRecords) {
  VerificationReport r("c1");
  r.add("q", "p", "1/3", Status::kPass);
  r.add_prediction("k", "f", "1/24");
  const std::string tsv = r.to_tsv();
  EXPECT_EQ(tsv.rfind("case\tquantity\tpath\tvalue\tstatus\n", 0), 0u);
  EXPECT_NE(tsv.find("c1\tq\tp\t1/3\tPASS\n"), std::string::npos);
  EXPECT_NE(tsv.find("# records=2 pass=1 fail=0 prediction=1 skip=0"), std::string::npos);

  const auto doc = nlohmann::json::parse(r.to_json());
  ASSERT_EQ(doc["records"].size(), 2u);
  EXPECT_EQ(doc["records"][0]["value"], "1/3");
  EXPECT_EQ(doc["records"][1]["status"], "PREDICTION");
  EXPECT_EQ(doc["summary"]["records"], 2);
}

TEST(Suites, OutputIndependentOfJobCount) {
  const suites::FfqlcMatrix ff{{Integer(2), Integer(3)}, 6, 3, true};
  EXPECT_EQ(suites::run_ffqlc(ff, 1).to_tsv(), suites::run_ffqlc(ff, 4).to_tsv());
  const suites::DirichletMatrix dm{15, 2, 2, 4, true};
  EXPECT_EQ(suites::run_dirichlet(dm, 1).to_json(), suites::run_dirichlet(dm, 3).to_json());
}

TEST(Suites, FfqlcRejectsBadFieldSizes) {
  EXPECT_THROW(suites::run_ffqlc({{Integer(6)}, 2, 1, false}), std::invalid_argument);
  EXPECT_THROW(suites::run_ffqlc({{}, 2, 1, false}), std::invalid_argument);
}

TEST(Suites, SmallestFfqlcRun) {
  const auto r = suites::run_ffqlc({{Integer(2)}, 2, 1, false});
  EXPECT_TRUE(r.all_passed());
  bool found = false;
  for (const auto& e : r.entries())
    if (e.case_id == "ff q=2 m=2 a=1 k=1" && e.quantity == "pi_odd" && e.path == "bredon_e2") {
      EXPECT_EQ(e.value, "Z/3");
      found = true;
    }
  EXPECT_TRUE(found);
}

TEST(CoverSpecs, ParsingAndValidation) {
  const auto one = suites::parse_cover_specs(R"({"p": 7, "d": 3, "f": [1, -1, 0, 1]})");
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0].f, (curves::FpPoly{1, 6, 0, 1}));
  EXPECT_EQ(suites::default_curve_order(one[0]), 12u);
  EXPECT_EQ(suites::parse_cover_specs(R"([{"p":3,"d":2,"f":[0,1]},{"p":5,"d":4,"f":[0,1]}])").size(), 2u);
  EXPECT_THROW(suites::parse_cover_specs(R"({"p": 7, "d": 4, "f": [0, 1]})"), std::invalid_argument);
  EXPECT_THROW(suites::parse_cover_specs(R"({"p": 7})"), std::invalid_argument);
  EXPECT_THROW(suites::parse_cover_specs("not json"), std::invalid_argument);
}

TEST(Suites, CurvesShareCensusPerPolynomial) {
  const auto covers = suites::parse_cover_specs(R"([{"p":5,"d":2,"f":[0,1]},{"p":5,"d":4,"f":[0,1]}])");
  const auto r = suites::run_curves(covers, 6);
  EXPECT_TRUE(r.all_passed());
  std::size_t census_rows = 0;
  for (const auto& e : r.entries()) census_rows += e.case_id.rfind("census", 0) == 0;
  // One census, six rows, two engines each.
  EXPECT_EQ(census_rows, 12u);
}

}  // namespace
}  // namespace eqlc
