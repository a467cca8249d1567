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

#include <string>

#include "json.hpp"

#include "constructions.hpp"
#include "linalg.hpp"
#include "verify.hpp"

// JSON request handlers shared by the C API. Each throws gfx::Error.
namespace gfx::service {

using nlohmann::json;

/// {"kind": ex|coex|labeled|aex|downset|bound|orthogonal|spacecount|hamming|multinomial, ...}
json formula(const json& req);

/// Construction parameters as in io::construction_params_from_json, plus an
/// optional "budget".
ConstructionReport construct(const json& req);

/// Report JSON for `m` under the construction parameters in `params`.
json certify(const Matrix& m, const json& params);

/// Single oracle run. Keys: mode, q, r, k, lists, kappa, downset, close,
/// n_list, threads, witness_limit, max_witnesses, prune, skip_over_budget, budget.
json oracle(const json& req);

/// CSV over "r_values" x "k_values" (weight/coweight) or "r_values" alone.
std::string oracle_sweep(const json& req);

/// {"suite": name, ...}; "certify" takes "matrix" and "report".
SuiteReport verify(const json& req);

/// CSV of the acceptance grid; "suites" selects a subset.
std::string tables(const json& req);

Budget budget_from_json(const json& req);

}  // namespace gfx::service
