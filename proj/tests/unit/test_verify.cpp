// Copyright 2026 The gfx Authors
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

#include "verify.hpp"

#include "helpers.hpp"

using namespace gfx;
using gfx::test::error_code;

TEST_CASE("every suite passes on a reduced grid") {
  VerifyOptions o;
  o.max_n = 5;
  o.max_r = 3;
  o.max_construct_r = 4;
  o.samples = 5;
  o.spacecount_samples = 3;
  for (const auto& name : suite_names()) {
    CAPTURE(name);
    const auto rep = run_suite(name, o);
    CHECK(rep.suite == name);
    CHECK_FALSE(rep.checks.empty());
    CHECK(rep.passed());
    CHECK(rep.violations() == 0);
  }
  CHECK(error_code([&] { run_suite("nope", o); }) == Errc::invalid_argument);
}

TEST_CASE("counting lemmas at q = 3 up to n = 8") {
  VerifyOptions o;
  o.q = 3;
  o.max_n = 8;
  const auto rep = verify_counting_lemmas(o);
  CHECK(rep.passed());
  std::size_t spacecount = 0;
  for (const auto& c : rep.checks) spacecount += c.name == "spacecount";
  CHECK(spacecount > 0);
}

TEST_CASE("findings never fail a suite") {
  SuiteReport r{"x", {}};
  r.checks.push_back(Check{"a", {}, "==", "1", "1", true, false});
  r.checks.push_back(Check{"b", {}, "==", "1", "2", false, true});
  CHECK(r.passed());
  r.checks.push_back(Check{"c", {}, "==", "1", "2", false, false});
  CHECK_FALSE(r.passed());
  CHECK(r.violations() == 1);
  const auto j = suite_report_to_json(r);
  CHECK(j["violations"].size() == 1);
  CHECK(j["findings"].size() == 1);
  CHECK_FALSE(j.contains("passed_checks"));
  CHECK(suite_report_to_json(r, true)["passed_checks"].size() == 1);
  const std::string csv = suite_report_to_csv({r});
  CHECK(csv.rfind("suite,name,params,relation,expected,actual,status\n", 0) == 0);
  CHECK(csv.find(",FAIL\n") != std::string::npos);
  CHECK(csv.find(",finding\n") != std::string::npos);
}
