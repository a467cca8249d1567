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

#include "service.hpp"

#include <sstream>

#include "error.hpp"
#include "formulas.hpp"
#include "json_io.hpp"
#include "search.hpp"

namespace gfx::service {
namespace {

template <typename T>
T need(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(Errc::invalid_argument, std::string("missing \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    fail(Errc::invalid_argument, std::string("bad value for \"") + key + "\"");
  }
}

template <typename T>
T opt(const json& j, const char* key, T fallback) {
  if (!j.is_object() || !j.contains(key) || j.at(key).is_null()) return fallback;
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    fail(Errc::invalid_argument, std::string("bad value for \"") + key + "\"");
  }
}

// Label system from "lists", or all of F^x as one list.
LabelSystem labels_of(const json& req) {
  if (req.contains("lists")) {
    json l{{"q", need<int>(req, "q")}, {"lists", req.at("lists")}};
    return io::labels_from_json(l);
  }
  return LabelSystem::all_nonzero(Field::make(need<int>(req, "q")));
}

WeightProfile kappa_of(const json& req) {
  auto k = io::kappa_from_json(req);
  if (!k) fail(Errc::invalid_argument, "missing \"kappa\"");
  return *k;
}

ProfileDownSet downset_of(const json& req) {
  auto d = io::downset_from_json(req);
  if (!d) fail(Errc::invalid_argument, "missing \"downset\"");
  return *d;
}

json value_json(const BigInt& v, const std::string& regime, const std::string& applicability) {
  return json{{"value", to_decimal(v)}, {"regime", regime}, {"applicability", applicability}};
}

CountMode count_mode_of(const json& req) {
  const auto m = opt<std::string>(req, "mode", "weight");
  if (m == "weight") return CountMode::weight;
  if (m == "coweight") return CountMode::coweight;
  fail(Errc::invalid_argument, "bound mode must be weight or coweight");
}

OracleQuery query_of(const json& req) {
  OracleQuery q;
  const auto mode_name = need<std::string>(req, "mode");
  const auto mode = parse_oracle_mode(mode_name);
  if (!mode) fail(Errc::invalid_argument, "unknown oracle mode \"" + mode_name + "\"");
  q.mode = *mode;
  q.field = Field::make(need<int>(req, "q"));
  q.r = need<int>(req, "r");
  if (q.r < 0) fail(Errc::invalid_argument, "r must be nonnegative");
  q.k = opt<int>(req, "k", 0);
  if (q.k < 0) fail(Errc::invalid_argument, "k must be nonnegative");
  if (q.mode == OracleMode::labeled || q.mode == OracleMode::affine) {
    q.labels = labels_of(req);
    q.kappa = kappa_of(req);
  } else if (q.mode == OracleMode::downset) {
    q.labels = labels_of(req);
    q.downset = downset_of(req);
  }
  q.n_list = opt<std::vector<std::size_t>>(req, "n_list", default_n_list(q.mode, q.r));
  q.budget = budget_from_json(req);
  q.threads = opt<unsigned>(req, "threads", 1);
  if (q.threads == 0) fail(Errc::invalid_argument, "threads must be positive");
  q.witness_limit = opt<std::size_t>(req, "witness_limit", q.witness_limit);
  q.prune = opt<bool>(req, "prune", true);
  q.skip_over_budget = opt<bool>(req, "skip_over_budget", false);
  return q;
}

std::string csv_list(const std::vector<std::size_t>& v) {
  std::string s = "\"";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "\"";
}

}  // namespace

Budget budget_from_json(const json& req) {
  Budget b;
  if (!req.is_object() || !req.contains("budget")) return b;
  const json& j = req.at("budget");
  b.subspaces = opt<std::uint64_t>(j, "subspaces", b.subspaces);
  b.members = opt<std::uint64_t>(j, "members", b.members);
  if (b.subspaces == 0 || b.members == 0) fail(Errc::invalid_argument, "budgets must be positive");
  return b;
}

json formula(const json& req) {
  const auto kind = need<std::string>(req, "kind");
  if (kind == "ex") return io::extremal_to_json(ex_formula(need<int>(req, "q"), need<int>(req, "r"), need<int>(req, "k")));
  if (kind == "coex")
    return io::extremal_to_json(coex_formula(need<int>(req, "q"), need<int>(req, "r"), need<int>(req, "k")));
  if (kind == "labeled") return io::extremal_to_json(ex_labeled_formula(labels_of(req), need<int>(req, "r"), kappa_of(req)));
  if (kind == "aex") return io::extremal_to_json(aex_formula(labels_of(req), need<int>(req, "r"), kappa_of(req)));
  if (kind == "downset")
    return value_json(downset_count(labels_of(req), need<int>(req, "r"), downset_of(req)), "downset", "exact-for-all-r");
  if (kind == "bound") {
    if (req.contains("kappa"))
      return value_json(labeled_bound(labels_of(req), need<int>(req, "r"), kappa_of(req)), "bound:labeled", "upper-bound");
    const CountMode m = count_mode_of(req);
    return value_json(bound_sums(need<int>(req, "q"), need<int>(req, "r"), need<int>(req, "k"), m),
                      m == CountMode::weight ? "bound:weight" : "bound:coweight", "upper-bound");
  }
  if (kind == "orthogonal")
    return value_json(count_orthogonal_nonzero(need<int>(req, "q"), need<int>(req, "n"), opt<int>(req, "beta", 0)),
                      "orthogonal", "exact-for-all-r");
  if (kind == "spacecount") {
    const int q = need<int>(req, "q"), r = need<int>(req, "r"), k = need<int>(req, "k"), i = need<int>(req, "i");
    const auto sc = spacecount(q, r, k, i);
    json out = value_json(sc.value, "spacecount", "exact-for-all-r");
    json terms = json::array();
    for (const auto& t : sc.terms) terms.push_back(to_decimal(t));
    out["terms"] = std::move(terms);
    out["lower_bound_regime"] = spacecount_bound_regime(q, r, k);
    out["lower_bound_holds"] = spacecount_lower_bound_holds(q, r, k, i);
    return out;
  }
  if (kind == "hamming") {
    const auto h = hamming_params(need<int>(req, "q"), need<int>(req, "r"));
    json out = value_json(h.length, "hamming", "exact-for-all-r");
    out["length"] = to_decimal(h.length);
    out["weight"] = to_decimal(h.weight);
    return out;
  }
  if (kind == "multinomial") return value_json(multinomial(need<int>(req, "r"), kappa_of(req)), "multinomial", "exact-for-all-r");
  fail(Errc::invalid_argument, "unknown formula kind \"" + kind + "\"");
}

ConstructionReport construct(const json& req) { return build(io::construction_params_from_json(req), budget_from_json(req)); }

json certify(const Matrix& m, const json& params) {
  return io::report_to_json(gfx::certify(m, io::construction_params_from_json(params)));
}

json oracle(const json& req) {
  const OracleQuery q = query_of(req);
  const OracleResult res = run_oracle(q);
  return io::oracle_result_to_json(q, res, opt<std::size_t>(req, "max_witnesses", 10));
}

std::string oracle_sweep(const json& req) {
  const auto r_values = need<std::vector<int>>(req, "r_values");
  const auto mode = parse_oracle_mode(need<std::string>(req, "mode"));
  if (!mode) fail(Errc::invalid_argument, "unknown oracle mode");
  const bool uses_k = *mode == OracleMode::weight || *mode == OracleMode::coweight;
  const auto k_values = uses_k ? need<std::vector<int>>(req, "k_values") : std::vector<int>{0};

  std::ostringstream out;
  out << "mode,q,r,k,n_list,max_count,best_n,exhaustive,formula,regime,bound\n";
  for (int r : r_values) {
    for (int k : k_values) {
      if (uses_k && k > r) continue;
      json one = req;
      one.erase("r_values");
      one.erase("k_values");
      one["r"] = r;
      one["k"] = k;
      const OracleQuery q = query_of(one);
      const OracleResult res = run_oracle(q);
      std::string value, regime, bound;
      auto take = [&](const ExtremalValue& v) {
        value = to_decimal(v.value);
        regime = v.regime;
      };
      switch (q.mode) {
        case OracleMode::weight:
          take(ex_formula(q.field.order(), r, k));
          bound = to_decimal(bound_sums(q.field.order(), r, k, CountMode::weight));
          break;
        case OracleMode::coweight:
          if (q.field.order() != 2 || k == 0) take(coex_formula(q.field.order(), r, k));
          bound = to_decimal(bound_sums(q.field.order(), r, k, CountMode::coweight));
          break;
        case OracleMode::labeled:
          if (q.kappa->norm() <= r) take(ex_labeled_formula(*q.labels, r, *q.kappa));
          bound = to_decimal(labeled_bound(*q.labels, r, *q.kappa));
          break;
        case OracleMode::affine:
          if (q.kappa->norm() <= r) take(aex_formula(*q.labels, r, *q.kappa));
          break;
        case OracleMode::downset:
          value = to_decimal(downset_count(*q.labels, r, *q.downset));
          regime = "downset";
          break;
      }
      out << oracle_mode_name(q.mode) << ',' << q.field.order() << ',' << r << ',' << (uses_k ? std::to_string(k) : "")
          << ',' << csv_list(q.n_list) << ',' << res.max_count << ',' << res.best_n << ','
          << (res.exhaustive ? "true" : "false") << ',' << value << ',' << regime << ',' << bound << '\n';
    }
  }
  return out.str();
}

SuiteReport verify(const json& req) {
  const auto suite = need<std::string>(req, "suite");
  if (suite == "certify") {
    if (!req.contains("matrix") || !req.contains("report"))
      fail(Errc::invalid_argument, "certify suite needs \"matrix\" and \"report\"");
    return verify_certificate(io::matrix_from_json(req.at("matrix")), req.at("report"));
  }
  VerifyOptions o;
  if (req.contains("q")) o.q = need<int>(req, "q");
  if (req.contains("r")) o.r = need<int>(req, "r");
  if (req.contains("k")) o.k = need<int>(req, "k");
  o.max_n = opt<int>(req, "max_n", o.max_n);
  o.max_r = opt<int>(req, "max_r", o.max_r);
  o.max_construct_r = opt<int>(req, "max_construct_r", o.max_construct_r);
  o.samples = opt<int>(req, "samples", o.samples);
  o.spacecount_samples = opt<int>(req, "spacecount_samples", o.spacecount_samples);
  o.seed = opt<std::uint64_t>(req, "seed", o.seed);
  o.threads = opt<unsigned>(req, "threads", 1);
  if (o.threads == 0) fail(Errc::invalid_argument, "threads must be positive");
  o.budget = budget_from_json(req);
  if (o.max_n < 1 || o.max_r < 1 || o.samples < 1) fail(Errc::invalid_argument, "max_n, max_r and samples must be positive");
  if (req.contains("kappa")) {
    o.kappa = kappa_of(req);
    o.labels = labels_of(req);
  }
  o.r_values = opt<std::vector<int>>(req, "r_values", {});
  return run_suite(suite, o);
}

std::string tables(const json& req) {
  const auto names = opt<std::vector<std::string>>(req, "suites", suite_names());
  std::vector<SuiteReport> reports;
  for (const auto& name : names) {
    json one = req;
    one.erase("suites");
    one["suite"] = name;
    reports.push_back(verify(one));
  }
  return suite_report_to_csv(reports);
}

}  // namespace gfx::service
