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

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "constructions.hpp"
#include "linalg.hpp"
#include "vectors.hpp"

namespace gfx {

/// Suite settings. Unset fields fall back to each suite's default grid.
struct VerifyOptions {
  std::optional<int> q;
  std::optional<int> r;
  std::optional<int> k;
  int max_n = 8;                // counting-lemmas: largest n (and r for spacecount)
  int max_r = 4;                // formula-vs-oracle: largest r
  int samples = 20;             // random vectors per (q, n) cell
  int spacecount_samples = 10;  // random weight-i vectors per (q, r, i)
  int max_construct_r = 6;      // constructions: largest r
  std::uint64_t seed = 1;
  unsigned threads = 1;
  Budget budget;
  std::optional<LabelSystem> labels;   // recursion
  std::optional<WeightProfile> kappa;  // recursion
  std::vector<int> r_values;           // recursion; empty means |kappa|+2 .. 5
};

/// One comparison. Findings are informational and never fail a suite.
struct Check {
  std::string name;
  nlohmann::json params;
  std::string relation;  // "==", "<=", ">=", "holds"
  std::string expected;
  std::string actual;
  bool ok = false;
  bool finding = false;
};

struct SuiteReport {
  std::string suite;
  std::vector<Check> checks;

  bool passed() const;
  std::size_t violations() const;
};

const std::vector<std::string>& suite_names();

/// Runs field-axioms, counting-lemmas, recursion, formula-vs-oracle,
/// uniqueness or constructions. Throws Errc::invalid_argument for an unknown name.
SuiteReport run_suite(const std::string& name, const VerifyOptions& options);

SuiteReport verify_field_axioms(const VerifyOptions& options);
SuiteReport verify_counting_lemmas(const VerifyOptions& options);
SuiteReport verify_recursion_suite(const VerifyOptions& options);
SuiteReport verify_formula_vs_oracle(const VerifyOptions& options);
SuiteReport verify_uniqueness(const VerifyOptions& options);
SuiteReport verify_constructions(const VerifyOptions& options);

/// Re-certifies `m` and compares the fresh report with `recorded` field by field.
SuiteReport verify_certificate(const Matrix& m, const nlohmann::json& recorded);

/// {"suite", "passed", "checks", "violations": [...], "findings": [...]}.
/// With `all_checks`, every passing check is listed under "passed_checks" too.
nlohmann::json suite_report_to_json(const SuiteReport& r, bool all_checks = false);

/// One line per check: suite,name,params,relation,expected,actual,status.
std::string suite_report_to_csv(const std::vector<SuiteReport>& reports, bool header = true);

}  // namespace gfx
