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

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "error.hpp"
#include "formulas.hpp"
#include "json_io.hpp"
#include "search.hpp"

namespace gfx {
namespace {

using nlohmann::json;

const std::vector<int> kAxiomOrders = {2, 3, 4, 5, 7, 8, 9, 11, 13, 16};

Check make_check(std::string name, json params, std::string relation, std::string expected, std::string actual, bool ok,
                 bool finding = false) {
  return Check{std::move(name), std::move(params), std::move(relation), std::move(expected), std::move(actual), ok, finding};
}

std::vector<int> orders_or(const VerifyOptions& o, std::vector<int> fallback) {
  if (o.q) return {*o.q};
  return fallback;
}

// Advances an odometer over the digits in `alphabet`; false after the last word.
bool next_word(std::vector<Elem>& word, std::vector<std::size_t>& pos, const std::vector<Elem>& alphabet) {
  for (std::size_t j = word.size(); j-- > 0;) {
    if (++pos[j] < alphabet.size()) {
      word[j] = alphabet[pos[j]];
      return true;
    }
    pos[j] = 0;
    word[j] = alphabet[0];
  }
  return false;
}

OracleQuery base_query(const VerifyOptions& o, const Field& f, OracleMode mode, int r) {
  OracleQuery q;
  q.field = f;
  q.mode = mode;
  q.r = r;
  q.n_list = default_n_list(mode, r);
  q.budget = o.budget;
  q.threads = o.threads;
  q.witness_limit = 1;
  return q;
}

json profiles_json(const ProfileDownSet& s) {
  json a = json::array();
  for (const auto& p : s.profiles()) a.push_back(std::vector<int>(p.counts().begin(), p.counts().end()));
  return a;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

// Every profile of width s with entries <= cap and norm <= max_norm.
std::vector<WeightProfile> small_profiles(std::size_t s, int cap, int max_norm) {
  std::vector<WeightProfile> out;
  std::vector<int> c(s, 0);
  while (true) {
    if (std::accumulate(c.begin(), c.end(), 0) <= max_norm) out.emplace_back(c);
    std::size_t j = 0;
    while (j < s && c[j] == cap) c[j++] = 0;
    if (j == s) break;
    ++c[j];
  }
  return out;
}

std::vector<LabelSystem> small_label_systems(const Field& f) {
  std::vector<LabelSystem> out{LabelSystem::all_nonzero(f)};
  switch (f.order()) {
    case 3: out.emplace_back(f, std::vector<std::vector<Elem>>{{1}, {2}}); break;
    case 4:
      out.emplace_back(f, std::vector<std::vector<Elem>>{{1, 2}, {3}});
      out.emplace_back(f, std::vector<std::vector<Elem>>{{1}, {2}});
      break;
    default: break;
  }
  return out;
}

// Appending one row maps a family on n rows to one on n + 1 rows, so the
// maximum at (next, n + 1) is at least the maximum at (base, n).
Check shifted_monotone_check(std::string name, json params, const OracleResult& base, const OracleResult& next) {
  std::string want, got;
  bool ok = true;
  for (const auto& lo : base.per_n) {
    auto hi = std::find_if(next.per_n.begin(), next.per_n.end(), [&](const PerLength& p) { return p.n == lo.n + 1; });
    if (lo.skipped || hi == next.per_n.end() || hi->skipped) continue;
    want += (want.empty() ? "" : " ") + std::to_string(lo.n) + ":" + std::to_string(lo.max_count);
    got += (got.empty() ? "" : " ") + std::to_string(hi->n) + ":" + std::to_string(hi->max_count);
    if (hi->max_count < lo.max_count) ok = false;
  }
  return make_check(std::move(name), std::move(params), ">= per n+1", want, got, ok);
}

}  // namespace

bool SuiteReport::passed() const { return violations() == 0; }

std::size_t SuiteReport::violations() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.ok && !c.finding; }));
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"field-axioms", "counting-lemmas", "recursion",
                                                 "formula-vs-oracle", "uniqueness", "constructions"};
  return names;
}

SuiteReport run_suite(const std::string& name, const VerifyOptions& o) {
  if (name == "field-axioms") return verify_field_axioms(o);
  if (name == "counting-lemmas") return verify_counting_lemmas(o);
  if (name == "recursion") return verify_recursion_suite(o);
  if (name == "formula-vs-oracle") return verify_formula_vs_oracle(o);
  if (name == "uniqueness") return verify_uniqueness(o);
  if (name == "constructions") return verify_constructions(o);
  fail(Errc::invalid_argument, "unknown suite \"" + name + "\"");
}

SuiteReport verify_field_axioms(const VerifyOptions& o) {
  SuiteReport rep{"field-axioms", {}};
  for (int q : orders_or(o, kAxiomOrders)) {
    const Field f = Field::make(q);
    std::map<std::string, std::uint64_t> bad;
    std::map<std::string, json> first;
    auto note = [&](const char* axiom, bool holds, json example) {
      auto& b = bad[axiom];
      if (!holds && b++ == 0) first[axiom] = std::move(example);
    };
    const auto n = static_cast<unsigned>(q);
    for (unsigned a = 0; a < n; ++a) {
      const auto ea = static_cast<Elem>(a);
      note("additive identity", f.add(ea, 0) == ea, {a});
      note("multiplicative identity", f.mul(ea, 1) == ea, {a});
      note("additive inverse", f.add(ea, f.neg(ea)) == 0, {a});
      if (a != 0) note("multiplicative inverse", f.mul(ea, f.inv(ea)) == 1, {a});
      for (unsigned b = 0; b < n; ++b) {
        const auto eb = static_cast<Elem>(b);
        note("additive commutativity", f.add(ea, eb) == f.add(eb, ea), {a, b});
        note("multiplicative commutativity", f.mul(ea, eb) == f.mul(eb, ea), {a, b});
        note("no zero divisors", (a == 0 || b == 0) == (f.mul(ea, eb) == 0), {a, b});
        for (unsigned c = 0; c < n; ++c) {
          const auto ec = static_cast<Elem>(c);
          note("additive associativity", f.add(f.add(ea, eb), ec) == f.add(ea, f.add(eb, ec)), {a, b, c});
          note("multiplicative associativity", f.mul(f.mul(ea, eb), ec) == f.mul(ea, f.mul(eb, ec)), {a, b, c});
          note("distributivity", f.mul(ea, f.add(eb, ec)) == f.add(f.mul(ea, eb), f.mul(ea, ec)), {a, b, c});
        }
      }
    }
    Elem acc = 0;
    for (int i = 0; i < f.characteristic(); ++i) acc = f.add(acc, 1);
    note("characteristic", acc == 0, {f.characteristic()});
    for (const auto& [axiom, count] : bad) {
      json params{{"q", q}, {"axiom", axiom}};
      if (count) params["counterexample"] = first[axiom];
      rep.checks.push_back(make_check("field-axiom", std::move(params), "==", "0", std::to_string(count), count == 0));
    }
  }
  return rep;
}

SuiteReport verify_counting_lemmas(const VerifyOptions& o) {
  SuiteReport rep{"counting-lemmas", {}};
  std::mt19937_64 rng(o.seed);

  // Vectors x in (F^x)^n with x.u = beta.
  for (int q : orders_or(o, {2, 3, 4, 5})) {
    const Field f = Field::make(q);
    const auto units = f.nonzero_elements();
    std::uniform_int_distribution<std::size_t> pick(0, units.size() - 1);
    for (int n = 1; n <= o.max_n; ++n) {
      const BigInt want0 = count_orthogonal_nonzero(q, n, 0);
      const BigInt want1 = count_orthogonal_nonzero(q, n, 1);
      std::set<std::string> got0, got1;
      for (int s = 0; s < o.samples; ++s) {
        std::vector<Elem> u(static_cast<std::size_t>(n));
        for (auto& e : u) e = units[pick(rng)];
        std::vector<std::uint64_t> tally(static_cast<std::size_t>(q), 0);
        std::vector<Elem> x(u.size(), units[0]);
        std::vector<std::size_t> pos(u.size(), 0);
        do {
          ++tally[dot(f, x, u)];
        } while (next_word(x, pos, units));
        got0.insert(std::to_string(tally[0]));
        for (int b = 1; b < q; ++b) got1.insert(std::to_string(tally[static_cast<std::size_t>(b)]));
      }
      auto joined = [](const std::set<std::string>& s) {
        std::string out;
        for (const auto& v : s) out += (out.empty() ? "" : "|") + v;
        return out;
      };
      const json params{{"q", q}, {"n", n}, {"samples", o.samples}};
      json p0 = params, p1 = params;
      p0["beta"] = "zero";
      p1["beta"] = "nonzero";
      rep.checks.push_back(make_check("orthogonal-nonzero", p0, "==", to_decimal(want0), joined(got0),
                                      got0.size() == 1 && *got0.begin() == to_decimal(want0)));
      rep.checks.push_back(make_check("orthogonal-nonzero", p1, "==", to_decimal(want1), joined(got1),
                                      got1.size() == 1 && *got1.begin() == to_decimal(want1)));
    }
  }

  // Vectors with k zeros in v^perp for weight-i vectors v.
  for (int q : orders_or(o, {3, 4})) {
    const Field f = Field::make(q);
    const auto units = f.nonzero_elements();
    std::vector<Elem> all(static_cast<std::size_t>(q));
    std::iota(all.begin(), all.end(), Elem{0});
    std::uniform_int_distribution<std::size_t> pick(0, units.size() - 1);
    const int max_r = std::min(o.max_n, 8);
    for (int r = 2; r <= max_r; ++r) {
      for (int i = 2; i <= r; ++i) {
        std::vector<std::set<std::uint64_t>> seen(static_cast<std::size_t>(r) + 1);
        for (int s = 0; s < o.spacecount_samples; ++s) {
          std::vector<std::size_t> idx(static_cast<std::size_t>(r));
          std::iota(idx.begin(), idx.end(), 0);
          std::shuffle(idx.begin(), idx.end(), rng);
          std::vector<Elem> v(static_cast<std::size_t>(r), 0);
          for (int t = 0; t < i; ++t) v[idx[static_cast<std::size_t>(t)]] = units[pick(rng)];
          std::vector<std::uint64_t> by_zeros(static_cast<std::size_t>(r) + 1, 0);
          std::vector<Elem> x(v.size(), 0);
          std::vector<std::size_t> pos(v.size(), 0);
          do {
            if (dot(f, x, v) == 0) ++by_zeros[coweight(x)];
          } while (next_word(x, pos, all));
          for (int k = 0; k <= r; ++k) seen[static_cast<std::size_t>(k)].insert(by_zeros[static_cast<std::size_t>(k)]);
        }
        for (int k = 0; k <= r; ++k) {
          const std::string want = to_decimal(spacecount(q, r, k, i).value);
          std::string got;
          for (auto v : seen[static_cast<std::size_t>(k)]) got += (got.empty() ? "" : "|") + std::to_string(v);
          rep.checks.push_back(make_check("spacecount", {{"q", q}, {"r", r}, {"k", k}, {"i", i}}, "==", want, got,
                                          got == want));
        }
      }
      for (int k = 0; k <= r; ++k) {
        if (!spacecount_bound_regime(q, r, k)) continue;
        for (int i = 2; i <= r; ++i) {
          const bool ok = spacecount_lower_bound_holds(q, r, k, i);
          rep.checks.push_back(make_check("spacecount-lower-bound", {{"q", q}, {"r", r}, {"k", k}, {"i", i}}, "holds",
                                          "true", ok ? "true" : "false", ok));
        }
      }
    }
  }
  return rep;
}

SuiteReport verify_recursion_suite(const VerifyOptions& o) {
  SuiteReport rep{"recursion", {}};
  const LabelSystem labels = o.labels ? *o.labels : LabelSystem(Field::make(2), {{1}});
  std::vector<WeightProfile> kappas;
  if (o.kappa)
    kappas.push_back(*o.kappa);
  else
    kappas = {WeightProfile({2}), WeightProfile({3})};
  for (const auto& kappa : kappas) {
    std::vector<int> rs = o.r_values;
    if (rs.empty())
      for (int r = kappa.norm() + 2; r <= 5; ++r) rs.push_back(r);
    const RecursionReport rr = verify_recursion(labels, kappa, rs, o.budget, o.threads);
    for (const auto& row : rr.rows) {
      json params{{"labels", io::labels_to_json(labels, kappa)}, {"r", row.r}, {"guaranteed", row.guaranteed}};
      rep.checks.push_back(make_check("aex-recursion", std::move(params), "<=", to_decimal(row.rhs), to_decimal(row.lhs),
                                      row.holds, !row.guaranteed));
    }
  }
  return rep;
}

SuiteReport verify_formula_vs_oracle(const VerifyOptions& o) {
  SuiteReport rep{"formula-vs-oracle", {}};
  const int max_r = o.max_r;

  // Down-sets: exact at every r.
  for (int q : orders_or(o, {2, 3})) {
    const Field f = Field::make(q);
    for (const auto& labels : small_label_systems(f)) {
      if (labels.size() > 2) continue;
      for (int r = 1; r <= max_r; ++r) {
        std::vector<ProfileDownSet> sets;
        if (labels.size() == 1) {
          for (int k = 0; k <= r; ++k) sets.push_back(downset_closure(std::vector<WeightProfile>{WeightProfile({k})}));
        } else {
          sets.push_back(downset_closure(std::vector<WeightProfile>{WeightProfile({1, 1})}));
          sets.push_back(downset_closure(std::vector<WeightProfile>{WeightProfile({2, 0}), WeightProfile({0, 1})}));
        }
        for (const auto& s : sets) {
          OracleQuery qy = base_query(o, f, OracleMode::downset, r);
          qy.labels = labels;
          qy.downset = s;
          const auto res = run_oracle(qy);
          const BigInt want = downset_count(labels, r, s);
          json params{{"q", q}, {"r", r}, {"labels", io::labels_to_json(labels)}, {"downset", profiles_json(s)},
                      {"n_list", qy.n_list}};
          rep.checks.push_back(make_check("downset-exact", std::move(params), "==", to_decimal(want),
                                          std::to_string(res.max_count), BigInt(res.max_count) == want));
        }
      }
    }
  }

  // Weight mode: q=2, k=2 exact; bounds and findings elsewhere.
  for (int q : orders_or(o, {2, 3})) {
    const Field f = Field::make(q);
    for (int r = 1; r <= max_r; ++r) {
      for (int k = 0; k <= r; ++k) {
        OracleQuery qy = base_query(o, f, OracleMode::weight, r);
        qy.k = k;
        const auto res = run_oracle(qy);
        const json params{{"q", q}, {"r", r}, {"k", k}, {"n_list", qy.n_list}};
        const BigInt bound = bound_sums(q, r, k, CountMode::weight);
        rep.checks.push_back(make_check("ex-bound", params, "<=", to_decimal(bound), std::to_string(res.max_count),
                                        BigInt(res.max_count) <= bound));
        const ExtremalValue ev = ex_formula(q, r, k);
        const bool equal = BigInt(res.max_count) == ev.value;
        const bool exact = ev.applicability == Applicability::exact_for_all_r;
        rep.checks.push_back(make_check(exact ? "ex-exact" : "ex-formula", params, "==", to_decimal(ev.value),
                                        std::to_string(res.max_count), equal, !exact));
        const auto built = build_weight_family(q, r, k);
        const std::size_t rows = built.matrix.rows();
        if (std::find(qy.n_list.begin(), qy.n_list.end(), rows) != qy.n_list.end())
          rep.checks.push_back(make_check("ex-construction", params, ">=", std::to_string(built.matrix.cols()),
                                          std::to_string(res.max_count), res.max_count >= built.matrix.cols()));
        bool monotone = true;
        for (std::size_t j = 1; j < res.per_n.size(); ++j)
          if (!res.per_n[j].skipped && !res.per_n[j - 1].skipped && res.per_n[j].max_count < res.per_n[j - 1].max_count)
            monotone = false;
        rep.checks.push_back(make_check("ex-n-monotone", params, "holds", "true", monotone ? "true" : "false", monotone));
      }
    }
  }

  // Co-weight mode: k = 0 exact; bounds, monotonicity in k and findings elsewhere.
  for (int q : orders_or(o, {3})) {
    const Field f = Field::make(q);
    for (int r = 1; r <= std::min(max_r, 3); ++r) {
      std::optional<OracleResult> prev;
      for (int k = 0; k <= r; ++k) {
        if (q == 2 && k >= 1) break;
        OracleQuery qy = base_query(o, f, OracleMode::coweight, r);
        qy.k = k;
        auto res = run_oracle(qy);
        const json params{{"q", q}, {"r", r}, {"k", k}, {"n_list", qy.n_list}};
        const BigInt bound = bound_sums(q, r, k, CountMode::coweight);
        rep.checks.push_back(make_check("coex-bound", params, "<=", to_decimal(bound), std::to_string(res.max_count),
                                        BigInt(res.max_count) <= bound));
        const ExtremalValue ev = coex_formula(q, r, k);
        const bool exact = ev.applicability == Applicability::exact_for_all_r;
        rep.checks.push_back(make_check(exact ? "coex-exact" : "coex-formula", params, "==", to_decimal(ev.value),
                                        std::to_string(res.max_count), BigInt(res.max_count) == ev.value, !exact));
        if (prev) {
          rep.checks.push_back(shifted_monotone_check("coex-k-monotone", params, *prev, res));
          rep.checks.push_back(make_check("coex-k-monotone-fixed-n", params, ">=", std::to_string(prev->max_count),
                                          std::to_string(res.max_count), res.max_count >= prev->max_count, true));
        }
        prev = std::move(res);
      }
    }
  }

  // Affine mode: monotone in kappa under appending a constant label row.
  for (int q : orders_or(o, {2, 3})) {
    const Field f = Field::make(q);
    const LabelSystem labels = q == 2 ? LabelSystem(f, {{1}}) : LabelSystem(f, {{1}, {2}});
    for (int r = 1; r <= std::min(max_r, 3); ++r) {
      for (const auto& kappa : small_profiles(labels.size(), 2, r)) {
        OracleQuery qy = base_query(o, f, OracleMode::affine, r);
        qy.labels = labels;
        qy.kappa = kappa;
        const auto base = run_oracle(qy);
        for (std::size_t i = 0; i < labels.size(); ++i) {
          std::vector<int> up(kappa.counts().begin(), kappa.counts().end());
          ++up[i];
          if (std::accumulate(up.begin(), up.end(), 0) > r) continue;
          OracleQuery qu = qy;
          qu.kappa = WeightProfile(up);
          const auto res = run_oracle(qu);
          json params{{"q", q}, {"r", r}, {"labels", io::labels_to_json(labels, kappa)}, {"raised", i},
                      {"n_list", qy.n_list}};
          rep.checks.push_back(shifted_monotone_check("aex-kappa-monotone", std::move(params), base, res));
        }
      }
    }
  }
  return rep;
}

SuiteReport verify_uniqueness(const VerifyOptions& o) {
  SuiteReport rep{"uniqueness", {}};
  struct Case {
    OracleMode mode;
    int q, r, k;
    std::vector<std::size_t> n_list;
    std::size_t expected_support;
    SupportMeasure measure;
    BigInt formula;
  };
  std::vector<Case> cases;
  if (o.q && o.r && o.k) {
    const int q = *o.q, r = *o.r, k = *o.k;
    const bool lifted = q == 2 && k > 0 && k % 2 == 0;
    cases.push_back({OracleMode::weight, q, r, k, default_n_list(OracleMode::weight, r),
                     static_cast<std::size_t>(r + (lifted ? 1 : 0)), SupportMeasure::nonzero_rows, ex_formula(q, r, k).value});
  } else {
    cases.push_back({OracleMode::weight, 2, 3, 2, {3, 4, 5}, 4, SupportMeasure::nonzero_rows, ex_formula(2, 3, 2).value});
    cases.push_back({OracleMode::coweight, 3, 2, 0, {2, 3}, 2, SupportMeasure::row_classes, coex_formula(3, 2, 0).value});
  }
  for (const auto& c : cases) {
    OracleQuery qy;
    qy.field = Field::make(c.q);
    qy.mode = c.mode;
    qy.r = c.r;
    qy.k = c.k;
    qy.n_list = c.n_list;
    qy.budget = o.budget;
    qy.threads = o.threads;
    qy.witness_limit = 100'000;
    const auto res = run_oracle(qy);
    json params{{"mode", oracle_mode_name(c.mode)}, {"q", c.q}, {"r", c.r}, {"k", c.k}, {"n_list", c.n_list},
                {"support_measure", c.measure == SupportMeasure::row_classes ? "row-classes" : "nonzero-rows"}};
    if (BigInt(res.max_count) != c.formula) {
      rep.checks.push_back(make_check("max-equals-formula", params, "==", to_decimal(c.formula),
                                      std::to_string(res.max_count), false, true));
      continue;
    }
    const auto u = check_uniqueness(res, c.expected_support, c.measure);
    std::string got;
    std::set<std::size_t> distinct(u.supports.begin(), u.supports.end());
    for (auto s : distinct) got += (got.empty() ? "" : "|") + std::to_string(s);
    params["witnesses"] = u.supports.size();
    rep.checks.push_back(make_check("witness-support", params, "==", std::to_string(c.expected_support), got,
                                    u.all_supports_match));
    if (u.symmetry_checked)
      rep.checks.push_back(make_check("unique-up-to-symmetry", params, "==", "1", std::to_string(u.symmetry_classes),
                                      u.unique_up_to_symmetry, true));
  }
  return rep;
}

SuiteReport verify_constructions(const VerifyOptions& o) {
  SuiteReport rep{"constructions", {}};
  auto record = [&](const ConstructionReport& r) {
    const auto& c = r.claimed;
    const auto& m = r.measured;
    std::ostringstream want, got;
    want << "cols=" << to_decimal(c.columns) << " rows=" << c.rows << " rank=" << c.rank << " a_rank=" << c.a_rank
         << " support=" << c.support << " distinct=1 members=1";
    got << "cols=" << m.columns << " rows=" << m.rows << " rank=" << m.rank << " a_rank=" << m.a_rank
        << " support=" << m.support << " distinct=" << m.distinct_columns << " members=" << m.members_ok;
    rep.checks.push_back(make_check("certify", {{"construction_id", r.construction_id}}, "==", want.str(), got.str(),
                                    r.verified()));
  };
  const int max_r = o.max_construct_r;
  for (int q : orders_or(o, {2, 3, 4})) {
    const Field f = Field::make(q);
    for (int r = 1; r <= max_r; ++r) {
      for (int k = 0; k <= std::min(3, r); ++k) {
        record(build_weight_family(q, r, k));
        if (q != 2 || k == 0) record(build_coweight_family(q, r, k));
      }
      for (const auto& labels : small_label_systems(f)) {
        for (const auto& kappa : small_profiles(labels.size(), 2, std::min(3, r))) {
          record(build_labeled_family(labels, r, kappa));
          const int room = r - (labels.varies(kappa) ? 1 : 0);
          if (kappa.norm() <= room) record(build_affine_family(labels, r, kappa));
        }
      }
    }
  }
  for (auto [q, r] : std::vector<std::pair<int, int>>{{2, 3}, {2, 4}, {3, 2}, {3, 3}}) {
    if (o.q && *o.q != q) continue;
    record(build_dual_hamming(q, r, o.budget));
  }
  return rep;
}

SuiteReport verify_certificate(const Matrix& m, const json& recorded) {
  SuiteReport rep{"certify", {}};
  if (!recorded.is_object() || !recorded.contains("params")) fail(Errc::parse_error, "report is missing \"params\"");
  const ConstructionParams params = io::construction_params_from_json(recorded.at("params"));
  const json fresh = io::report_to_json(certify(m, params));
  for (const char* top : {"construction_id", "verified"}) {
    const json want = recorded.value(top, json());
    rep.checks.push_back(make_check(top, json::object(), "==", want.dump(), fresh.at(top).dump(), want == fresh.at(top)));
  }
  for (const char* section : {"claimed", "measured"}) {
    const json want_sec = recorded.value(section, json::object());
    for (const auto& [key, val] : fresh.at(section).items()) {
      const json want = want_sec.value(key, json());
      rep.checks.push_back(make_check(std::string(section) + "." + key, json::object(), "==", want.dump(), val.dump(),
                                      want == val));
    }
  }
  const bool verified = fresh.at("verified").get<bool>();
  rep.checks.push_back(make_check("claims-hold", {{"construction_id", fresh.at("construction_id")}}, "holds", "true",
                                  verified ? "true" : "false", verified));
  return rep;
}

json suite_report_to_json(const SuiteReport& r, bool all_checks) {
  auto to_json = [](const Check& c) {
    return json{{"name", c.name},         {"params", c.params}, {"relation", c.relation},
                {"expected", c.expected}, {"actual", c.actual}, {"ok", c.ok}};
  };
  json violations = json::array(), findings = json::array(), passed = json::array();
  for (const auto& c : r.checks) {
    if (c.finding)
      findings.push_back(to_json(c));
    else if (!c.ok)
      violations.push_back(to_json(c));
    else if (all_checks)
      passed.push_back(to_json(c));
  }
  json out{{"suite", r.suite},
           {"passed", r.passed()},
           {"checks", r.checks.size()},
           {"violations", std::move(violations)},
           {"findings", std::move(findings)}};
  if (all_checks) out["passed_checks"] = std::move(passed);
  return out;
}

std::string suite_report_to_csv(const std::vector<SuiteReport>& reports, bool header) {
  std::string out;
  if (header) out += "suite,name,params,relation,expected,actual,status\n";
  for (const auto& r : reports) {
    for (const auto& c : r.checks) {
      const char* status = c.finding ? (c.ok ? "agree" : "finding") : (c.ok ? "pass" : "FAIL");
      out += csv_field(r.suite) + "," + csv_field(c.name) + "," + csv_field(c.params.dump()) + "," + csv_field(c.relation) +
             "," + csv_field(c.expected) + "," + csv_field(c.actual) + "," + status + "\n";
    }
  }
  return out;
}

}  // namespace gfx
