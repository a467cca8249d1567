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

#include "json_io.hpp"

#include <set>
#include <string>

#include "error.hpp"

namespace gfx::io {
namespace {

template <typename T>
T get_field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(Errc::parse_error, std::string("missing key \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    fail(Errc::parse_error, std::string("bad value for \"") + key + "\": " + e.what());
  }
}

Elem to_elem(const Field& f, long long v) {
  if (v < 0 || !f.contains(static_cast<unsigned>(v)))
    fail(Errc::parse_error, "entry " + std::to_string(v) + " is not an element of GF(" + std::to_string(f.order()) + ")");
  return static_cast<Elem>(v);
}

WeightProfile profile_from_array(const json& a) {
  if (!a.is_array()) fail(Errc::parse_error, "weight profile must be an array");
  std::vector<int> counts;
  for (const auto& c : a) {
    if (!c.is_number_integer() || c.get<long long>() < 0) fail(Errc::parse_error, "profile entries must be nonnegative integers");
    counts.push_back(c.get<int>());
  }
  return WeightProfile(std::move(counts));
}

json profile_to_array(const WeightProfile& p) { return json(std::vector<int>(p.counts().begin(), p.counts().end())); }

}  // namespace

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    fail(Errc::parse_error, e.what());
  }
}

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Elem e : m.row(i)) row.push_back(static_cast<int>(e));
    rows.push_back(std::move(row));
  }
  return json{{"q", m.field().order()}, {"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

Matrix matrix_from_json(const json& j) {
  const Field f = Field::make(get_field<int>(j, "q"));
  const auto rows = get_field<std::size_t>(j, "rows");
  const auto cols = get_field<std::size_t>(j, "cols");
  const json& entries = j.at("entries");
  if (!entries.is_array() || entries.size() != rows) fail(Errc::parse_error, "\"entries\" must hold `rows` arrays");
  std::vector<Elem> data;
  data.reserve(rows * cols);
  for (const auto& row : entries) {
    if (!row.is_array() || row.size() != cols) fail(Errc::parse_error, "each row must hold `cols` entries");
    for (const auto& e : row) {
      if (!e.is_number_integer()) fail(Errc::parse_error, "matrix entries must be integers");
      data.push_back(to_elem(f, e.get<long long>()));
    }
  }
  return Matrix(f, rows, cols, std::move(data));
}

LabelSystem labels_from_json(const json& j) {
  const Field f = Field::make(get_field<int>(j, "q"));
  const json& lists = j.at("lists");
  if (!lists.is_array()) fail(Errc::parse_error, "\"lists\" must be an array of arrays");
  std::vector<std::vector<Elem>> out;
  for (const auto& l : lists) {
    if (!l.is_array()) fail(Errc::parse_error, "\"lists\" must be an array of arrays");
    std::vector<Elem> list;
    for (const auto& e : l) {
      if (!e.is_number_integer()) fail(Errc::parse_error, "labels must be integers");
      list.push_back(to_elem(f, e.get<long long>()));
    }
    out.push_back(std::move(list));
  }
  return LabelSystem(f, std::move(out));
}

std::optional<WeightProfile> kappa_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kappa")) return std::nullopt;
  return profile_from_array(j.at("kappa"));
}

std::optional<ProfileDownSet> downset_from_json(const json& j) {
  if (!j.is_object() || !j.contains("downset")) return std::nullopt;
  const json& d = j.at("downset");
  if (!d.is_array()) fail(Errc::parse_error, "\"downset\" must be an array of profiles");
  std::vector<WeightProfile> profiles;
  for (const auto& p : d) profiles.push_back(profile_from_array(p));
  if (j.value("close", false)) return downset_closure(profiles);
  return ProfileDownSet(std::set<WeightProfile>(profiles.begin(), profiles.end()));
}

json labels_to_json(const LabelSystem& l, const std::optional<WeightProfile>& kappa) {
  json lists = json::array();
  for (const auto& list : l.lists()) {
    json a = json::array();
    for (Elem e : list) a.push_back(static_cast<int>(e));
    lists.push_back(std::move(a));
  }
  json out{{"q", l.field().order()}, {"lists", std::move(lists)}};
  if (kappa) out["kappa"] = profile_to_array(*kappa);
  return out;
}

json extremal_to_json(const ExtremalValue& v) {
  return json{{"value", to_decimal(v.value)}, {"regime", v.regime}, {"applicability", applicability_name(v.applicability)}};
}

json construction_params_to_json(const ConstructionParams& p) {
  json out{{"kind", construction_name(p.kind)}, {"q", p.q}, {"r", p.r}};
  if (p.kind == ConstructionKind::weight || p.kind == ConstructionKind::coweight) out["k"] = p.k;
  if (p.labels) {
    json l = labels_to_json(*p.labels, p.kappa);
    out["lists"] = l["lists"];
    if (p.kappa) out["kappa"] = l["kappa"];
  }
  return out;
}

ConstructionParams construction_params_from_json(const json& j) {
  ConstructionParams p;
  const auto kind_name = get_field<std::string>(j, "kind");
  const auto kind = parse_construction_kind(kind_name);
  if (!kind) fail(Errc::invalid_argument, "unknown construction kind \"" + kind_name + "\"");
  p.kind = *kind;
  p.q = get_field<int>(j, "q");
  p.r = get_field<int>(j, "r");
  p.k = j.value("k", 0);
  if (p.kind == ConstructionKind::labeled || p.kind == ConstructionKind::affine) {
    p.labels = labels_from_json(j);
    p.kappa = kappa_from_json(j);
    if (!p.kappa) fail(Errc::parse_error, "missing key \"kappa\"");
  }
  return p;
}

json report_to_json(const ConstructionReport& r) {
  const auto& c = r.claimed;
  const auto& m = r.measured;
  json out{
      {"construction_id", r.construction_id},
      {"params", construction_params_to_json(r.params)},
      {"claimed",
       {{"columns", to_decimal(c.columns)},
        {"rows", c.rows},
        {"rank", c.rank},
        {"a_rank", c.a_rank},
        {"support", c.support},
        {"rank_bound", c.rank_bound},
        {"bound_on", c.affine_bound ? "a_rank" : "rank"}}},
      {"measured",
       {{"columns", std::to_string(m.columns)},
        {"rows", m.rows},
        {"rank", m.rank},
        {"a_rank", m.a_rank},
        {"support", m.support},
        {"distinct_columns", m.distinct_columns},
        {"members_ok", m.members_ok}}},
      {"verified", r.verified()},
  };
  if (r.params.kind == ConstructionKind::dual_hamming)
    out["claimed"]["column_weight"] = to_decimal(hamming_params(r.params.q, r.params.r).weight);
  return out;
}

json oracle_result_to_json(const OracleQuery& q, const OracleResult& r, std::size_t max_witnesses) {
  json per_n = json::array();
  for (const auto& pl : r.per_n) {
    per_n.push_back(json{{"n", pl.n},
                         {"max_count", pl.max_count},
                         {"witness_count", pl.witness_count},
                         {"subspaces_scanned", pl.subspaces_scanned},
                         {"subspaces_pruned", pl.subspaces_pruned},
                         {"skipped", pl.skipped}});
  }
  json witnesses = json::array();
  for (std::size_t i = 0; i < r.witnesses.size() && i < max_witnesses; ++i) {
    const auto& w = r.witnesses[i];
    witnesses.push_back(json{{"n", w.n},
                             {"basis", matrix_to_json(w.subspace.basis())},
                             {"columns", matrix_to_json(Matrix::from_columns(q.field, w.n, w.counted))},
                             {"support", w.support}});
  }
  json out{{"mode", oracle_mode_name(q.mode)},
           {"q", q.field.order()},
           {"r", q.r},
           {"n_list", q.n_list},
           {"max_count", r.max_count},
           {"best_n", r.best_n},
           {"per_n", std::move(per_n)},
           {"witness_count", r.witness_count},
           {"witnesses_truncated", r.witnesses_truncated},
           {"witnesses", std::move(witnesses)},
           {"exhaustive", r.exhaustive}};
  if (q.mode == OracleMode::weight || q.mode == OracleMode::coweight) out["k"] = q.k;
  if (q.labels) out["labels"] = labels_to_json(*q.labels, q.kappa);
  if (q.downset) {
    json d = json::array();
    for (const auto& p : q.downset->profiles()) d.push_back(profile_to_array(p));
    out["downset"] = std::move(d);
  }
  return out;
}

json uniqueness_to_json(const UniquenessReport& u) {
  json out{{"expected_support", u.expected_support},
           {"supports", u.supports},
           {"all_supports_match", u.all_supports_match},
           {"symmetry_checked", u.symmetry_checked}};
  if (u.symmetry_checked) {
    out["symmetry_classes"] = u.symmetry_classes;
    out["unique_up_to_symmetry"] = u.unique_up_to_symmetry;
  }
  return out;
}

json recursion_to_json(const RecursionReport& r) {
  json rows = json::array();
  for (const auto& row : r.rows) {
    rows.push_back(json{{"r", row.r},
                        {"lhs", to_decimal(row.lhs)},
                        {"rhs", to_decimal(row.rhs)},
                        {"holds", row.holds},
                        {"guaranteed", row.guaranteed}});
  }
  return json{{"rows", std::move(rows)}, {"values", r.values}, {"holds_where_guaranteed", r.holds_where_guaranteed}};
}

}  // namespace gfx::io
