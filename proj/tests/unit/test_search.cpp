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

#include "search.hpp"

#include <map>

#include "brute.hpp"
#include "formulas.hpp"
#include "helpers.hpp"

using namespace gfx;
using gfx::test::error_code;

namespace {

using PerN = std::map<std::size_t, std::size_t>;

OracleQuery query(OracleMode mode, int q, int r, int k, std::vector<std::size_t> n_list) {
  OracleQuery o;
  o.field = Field::make(q);
  o.mode = mode;
  o.r = r;
  o.k = k;
  o.n_list = std::move(n_list);
  return o;
}

OracleQuery labeled_query(OracleMode mode, int q, std::vector<std::vector<Elem>> lists, std::vector<int> kappa, int r,
                          std::vector<std::size_t> n_list) {
  auto o = query(mode, q, r, 0, std::move(n_list));
  o.labels = LabelSystem(o.field, std::move(lists));
  o.kappa = WeightProfile(std::move(kappa));
  return o;
}

PerN per_n(const OracleResult& res) {
  PerN m;
  for (const auto& p : res.per_n) m[p.n] = p.max_count;
  return m;
}

// Frozen from tests/support/freeze_oracle_values.cpp (independent brute force).
struct Frozen {
  OracleMode mode;
  int q, r, k;
  std::vector<std::size_t> n_list;
  std::size_t max_count;
  PerN per_n;  // empty: not pinned
};

const std::vector<Frozen> kFrozen{
    {OracleMode::weight, 2, 3, 2, {3, 4, 5}, 6, {{3, 3}, {4, 6}, {5, 6}}},
    {OracleMode::weight, 3, 2, 1, {2, 3}, 4, {}},
    {OracleMode::weight, 2, 2, 2, {2, 3, 4}, 3, {{2, 1}, {3, 3}, {4, 3}}},
    {OracleMode::weight, 2, 4, 2, {4, 5}, 10, {{4, 6}, {5, 10}}},
    {OracleMode::weight, 3, 2, 2, {2, 3, 4}, 6, {{2, 4}, {3, 6}, {4, 6}}},
    {OracleMode::weight, 2, 3, 3, {3, 4, 5}, 4, {{3, 1}, {4, 3}, {5, 4}}},
    {OracleMode::weight, 3, 3, 2, {3, 4}, 12, {{3, 12}, {4, 12}}},
    {OracleMode::weight, 4, 2, 1, {2, 3}, 6, {}},
    {OracleMode::weight, 4, 2, 2, {2, 3}, 9, {}},
    {OracleMode::coweight, 3, 2, 0, {2, 3}, 4, {}},
    {OracleMode::coweight, 3, 3, 1, {3, 4}, 14, {{3, 12}, {4, 14}}},
    {OracleMode::coweight, 2, 2, 0, {2, 3}, 1, {}},
    {OracleMode::coweight, 3, 2, 1, {2, 3, 4}, 8, {{2, 4}, {3, 6}, {4, 8}}},
    {OracleMode::coweight, 3, 2, 2, {2, 3, 4}, 6, {{2, 1}, {3, 4}, {4, 6}}},
    {OracleMode::coweight, 3, 3, 0, {3, 4}, 8, {}},
    {OracleMode::coweight, 4, 2, 0, {2, 3}, 9, {}},
};

}  // namespace

TEST_CASE("frozen weight and coweight maxima") {
  for (const auto& f : kFrozen) {
    CAPTURE(oracle_mode_name(f.mode));
    CAPTURE(f.q);
    CAPTURE(f.r);
    CAPTURE(f.k);
    const auto res = run_oracle(query(f.mode, f.q, f.r, f.k, f.n_list));
    CHECK(res.exhaustive);
    CHECK(res.max_count == f.max_count);
    if (!f.per_n.empty()) CHECK(per_n(res) == f.per_n);
  }
}

TEST_CASE("frozen labeled, affine and downset maxima") {
  using M = OracleMode;
  CHECK(run_oracle(labeled_query(M::affine, 2, {{1}}, {1}, 2, {2, 3})).max_count == 2);
  auto a = run_oracle(labeled_query(M::affine, 2, {{1}}, {2}, 3, {3, 4}));
  CHECK(a.max_count == 4);
  CHECK(per_n(a) == PerN{{3, 3}, {4, 4}});
  CHECK(run_oracle(labeled_query(M::affine, 2, {{1}}, {0}, 2, {1, 2, 3})).max_count == 1);
  CHECK(run_oracle(labeled_query(M::affine, 3, {{1, 2}}, {1}, 2, {1, 2, 3})).max_count == 2);
  auto b = run_oracle(labeled_query(M::affine, 3, {{1}, {2}}, {1, 1}, 3, {2, 3, 4}));
  CHECK(b.max_count == 6);
  CHECK(per_n(b) == PerN{{2, 2}, {3, 6}, {4, 6}});

  auto c = run_oracle(labeled_query(M::labeled, 3, {{1}, {2}}, {1, 1}, 2, {2, 3, 4}));
  CHECK(c.max_count == 6);
  CHECK(per_n(c) == PerN{{2, 2}, {3, 6}, {4, 6}});
  CHECK(run_oracle(labeled_query(M::labeled, 2, {{1}}, {2}, 3, {3, 4})).max_count == 6);
  CHECK(run_oracle(labeled_query(M::labeled, 3, {{1, 2}}, {1}, 2, {2, 3})).max_count == 4);

  auto ds = [](int q, std::vector<std::vector<Elem>> lists, std::vector<WeightProfile> gens, int r,
               std::vector<std::size_t> n_list) {
    auto o = query(OracleMode::downset, q, r, 0, std::move(n_list));
    o.labels = LabelSystem(o.field, std::move(lists));
    o.downset = downset_closure(gens);
    return run_oracle(o).max_count;
  };
  CHECK(ds(2, {{1}}, {WeightProfile({2})}, 3, {3, 4}) == 7);
  CHECK(ds(3, {{1, 2}}, {WeightProfile({1})}, 2, {2, 3, 4}) == 5);
  CHECK(ds(3, {{1}, {2}}, {WeightProfile({1, 1})}, 2, {2, 3}) == 7);
  CHECK(ds(3, {{1}, {2}}, {}, 2, {2, 3}) == 0);
}

TEST_CASE("frozen affine table over GF(2)") {
  // aex with lists ({1}), n from max(r-1, k) to r+2; index [k][r-1]
  const std::size_t expect[4][4] = {{1, 1, 1, 0}, {1, 2, 3, 4}, {1, 2, 4, 6}, {1, 2, 4, 8}};
  for (int k = 0; k <= 3; ++k)
    for (int r = 1; r <= 4; ++r) {
      if (k == 0 && r == 4) continue;
      std::vector<std::size_t> ns;
      for (int n = std::max(r - 1, k); n <= r + 2; ++n) ns.push_back(static_cast<std::size_t>(n));
      CAPTURE(k);
      CAPTURE(r);
      CHECK(run_oracle(labeled_query(OracleMode::affine, 2, {{1}}, {k}, r, ns)).max_count == expect[k][r - 1]);
    }
}

TEST_CASE("live brute cross-check on small cases") {
  for (int q : {2, 3})
    for (int r = 1; r <= 2; ++r)
      for (int k = 0; k <= r; ++k) {
        const brute::Field bf(q);
        const std::vector<std::size_t> ns{static_cast<std::size_t>(r), static_cast<std::size_t>(r + 1)};
        const auto bw = brute::scan(bf, static_cast<std::size_t>(r), ns,
                                    [&](const brute::Vec& x) { return brute::weight(x) == static_cast<std::size_t>(k); });
        const auto bc = brute::scan(bf, static_cast<std::size_t>(r), ns, [&](const brute::Vec& x) {
          return x.size() - brute::weight(x) == static_cast<std::size_t>(k);
        });
        CAPTURE(q);
        CAPTURE(r);
        CAPTURE(k);
        CHECK(run_oracle(query(OracleMode::weight, q, r, k, ns)).max_count == bw.max_count);
        CHECK(run_oracle(query(OracleMode::coweight, q, r, k, ns)).max_count == bc.max_count);
      }
}

TEST_CASE("witnesses are genuine") {
  const auto res = run_oracle(query(OracleMode::weight, 3, 2, 1, {2, 3}));
  REQUIRE_FALSE(res.witnesses.empty());
  CHECK(res.witness_count == res.witnesses.size());
  for (const auto& w : res.witnesses) {
    CHECK(w.counted.size() == res.max_count);
    for (const auto& v : w.counted) CHECK(weight(v) == 1);
    const Matrix m = Matrix::from_columns(Field::make(3), w.n, w.counted);
    CHECK(rank(m) <= 2);
  }
  for (std::size_t i = 1; i < res.witnesses.size(); ++i) CHECK(res.witnesses[i - 1].n <= res.witnesses[i].n);
}

TEST_CASE("threads and pruning do not change results") {
  for (auto mode : {OracleMode::weight, OracleMode::coweight}) {
    auto base = query(mode, 3, 2, 1, {2, 3, 4});
    const auto a = run_oracle(base);
    base.threads = 4;
    const auto b = run_oracle(base);
    base.prune = false;
    base.threads = 1;
    const auto c = run_oracle(base);
    for (const auto* x : {&b, &c}) {
      CHECK(x->max_count == a.max_count);
      CHECK(x->best_n == a.best_n);
      CHECK(x->witness_count == a.witness_count);
      REQUIRE(x->witnesses.size() == a.witnesses.size());
      for (std::size_t i = 0; i < a.witnesses.size(); ++i) CHECK(x->witnesses[i].counted == a.witnesses[i].counted);
    }
    CHECK(per_n(b) == per_n(a));
    CHECK(per_n(c) == per_n(a));
  }
}

TEST_CASE("budgets and argument errors") {
  auto q = query(OracleMode::weight, 3, 3, 1, {3, 4, 5});
  q.budget.subspaces = 10;
  CHECK(error_code([&] { run_oracle(q); }) == Errc::budget_exceeded);
  q.skip_over_budget = true;
  const auto res = run_oracle(q);
  CHECK_FALSE(res.exhaustive);
  REQUIRE(res.per_n.size() == 3);
  CHECK_FALSE(res.per_n[0].skipped);  // GF(3)^3 has a single 3-dimensional subspace
  CHECK(res.per_n[0].max_count == 6);
  CHECK(res.per_n[2].skipped);

  CHECK(error_code([] { run_oracle(query(OracleMode::weight, 2, 3, 1, {2})); }) == Errc::invalid_argument);
  CHECK(error_code([] { run_oracle(query(OracleMode::weight, 6, 2, 1, {2})); }) == Errc::not_prime_power);
  CHECK(error_code([] { oracle_coex(query(OracleMode::weight, 3, 2, 1, {2})); }) == Errc::invalid_argument);
  CHECK(default_n_list(OracleMode::weight, 3) == std::vector<std::size_t>{3, 4, 5});
  CHECK(default_n_list(OracleMode::affine, 3) == std::vector<std::size_t>{2, 3, 4, 5});
}

TEST_CASE("uniqueness checks") {
  const auto w = run_oracle(query(OracleMode::weight, 2, 3, 2, {3, 4, 5}));
  const auto u = check_uniqueness(w, 4);
  CHECK(u.all_supports_match);
  for (auto s : u.supports) CHECK(s == 4);

  const auto c = run_oracle(query(OracleMode::coweight, 3, 2, 0, {2, 3}));
  const auto uc = check_uniqueness(c, 2, SupportMeasure::row_classes);
  CHECK(uc.all_supports_match);

  OracleResult empty;
  empty.exhaustive = true;
  CHECK(error_code([&] { check_uniqueness(empty, 1); }) == Errc::not_exhaustive);
  auto partial = w;
  partial.exhaustive = false;
  CHECK(error_code([&] { check_uniqueness(partial, 4); }) == Errc::not_exhaustive);
}

TEST_CASE("canonical column sets are invariant under row symmetries") {
  const Field f = Field::make(3);
  const std::vector<std::vector<Elem>> a{{1, 0, 2}, {0, 1, 1}};
  // swap rows 0 and 1, then scale row 2 by 2
  const std::vector<std::vector<Elem>> b{{1, 0, 2}, {0, 1, 1}};
  const std::vector<std::vector<Elem>> b2{{0, 1, 1}, {1, 0, 2}};
  CHECK(canonical_column_set(f, a, 3) == canonical_column_set(f, b, 3));
  CHECK(canonical_column_set(f, a, 3) == canonical_column_set(f, b2, 3));
  const std::vector<std::vector<Elem>> c{{1, 1, 2}, {0, 1, 1}};
  CHECK(canonical_column_set(f, a, 3) != canonical_column_set(f, c, 3));
}

TEST_CASE("affine recursion") {
  const LabelSystem l(Field::make(2), {{1}});
  const auto rep = verify_recursion(l, WeightProfile({2}), {4});
  REQUIRE(rep.rows.size() == 1);
  CHECK(rep.rows[0].guaranteed);
  CHECK(rep.rows[0].holds);
  CHECK(rep.holds_where_guaranteed);
  CHECK(rep.rows[0].lhs == 6);
  CHECK(rep.rows[0].rhs == 7);  // aex*(3,(2)) + aex*(3,(1)) = 4 + 3
}
