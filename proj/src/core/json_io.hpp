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

#include <optional>
#include <string>

#include "json.hpp"

#include "constructions.hpp"
#include "formulas.hpp"
#include "linalg.hpp"
#include "search.hpp"
#include "vectors.hpp"

namespace gfx::io {

using nlohmann::json;

/// {"q": int, "rows": int, "cols": int, "entries": [[int, ...], ...]}
json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const json& j);

/// {"q": int, "lists": [[int, ...], ...], "kappa": [int, ...]}; kappa and
/// an optional "downset": [[int, ...], ...] are read by the helpers below.
LabelSystem labels_from_json(const json& j);
std::optional<WeightProfile> kappa_from_json(const json& j);
/// Reads "downset"; with "close": true takes the down-closure instead of
/// rejecting a set that is not down-closed.
std::optional<ProfileDownSet> downset_from_json(const json& j);
json labels_to_json(const LabelSystem& l, const std::optional<WeightProfile>& kappa = std::nullopt);

json extremal_to_json(const ExtremalValue& v);

json construction_params_to_json(const ConstructionParams& p);
ConstructionParams construction_params_from_json(const json& j);
/// Report sidecar (matrix excluded).
json report_to_json(const ConstructionReport& r);

/// `max_witnesses` caps how many witnesses are serialized.
json oracle_result_to_json(const OracleQuery& q, const OracleResult& r, std::size_t max_witnesses);

json uniqueness_to_json(const UniquenessReport& u);
json recursion_to_json(const RecursionReport& r);

/// Parses text as JSON, mapping syntax errors to Errc::parse_error.
json parse(const std::string& text);

}  // namespace gfx::io
