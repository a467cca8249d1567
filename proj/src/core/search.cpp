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

#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <thread>

#include "error.hpp"

namespace gfx {
namespace {

using Key = std::vector<Elem>;  // RREF basis entries, row-major

// Decides whether a subspace member qualifies for the query's count.
class Qualifier {
 public:
  explicit Qualifier(const OracleQuery& q) : mode_(q.mode), k_(static_cast<std::size_t>(q.k)) {
    if (mode_ == OracleMode::weight || mode_ == OracleMode::coweight) return;
    const LabelSystem& l = *q.labels;
    owner_.assign(static_cast<std::size_t>(q.field.order()), -1);
    for (std::size_t i = 0; i < l.size(); ++i)
      for (Elem e : l.list(i)) owner_[e] = static_cast<int>(i);
    s_ = l.size();
    if (mode_ == OracleMode::downset) {
      radix_ = static_cast<std::size_t>(q.downset->max_norm()) + 1;
      std::size_t cells = 1;
      for (std::size_t i = 0; i < s_; ++i) cells *= radix_;
      member_.assign(cells, false);
      for (const auto& p : q.downset->profiles()) member_[encode(p.counts())] = true;
    } else {
      target_.assign(q.kappa->counts().begin(), q.kappa->counts().end());
    }
    counts_.resize(s_);
  }

  bool operator()(std::span<const Elem> x) {
    switch (mode_) {
      case OracleMode::weight: return weight(x) == k_;
      case OracleMode::coweight: return coweight(x) == k_;
      case OracleMode::labeled: return profile_is_target(x);
      case OracleMode::affine: return x[0] == 1 && profile_is_target(x.subspan(1));
      case OracleMode::downset: {
        if (!tally(x)) return false;
        for (int c : counts_)
          if (static_cast<std::size_t>(c) >= radix_) return false;
        return member_[encode(counts_)];
      }
    }
    return false;
  }

 private:
  bool tally(std::span<const Elem> x) {
    std::fill(counts_.begin(), counts_.end(), 0);
    for (Elem e : x) {
      if (e == 0) continue;
      const int o = owner_[e];
      if (o < 0) return false;
      ++counts_[static_cast<std::size_t>(o)];
    }
    return true;
  }
  bool profile_is_target(std::span<const Elem> x) { return tally(x) && counts_ == target_; }
  std::size_t encode(std::span<const int> c) const {
    std::size_t code = 0;
    for (std::size_t i = c.size(); i-- > 0;) code = code * radix_ + static_cast<std::size_t>(c[i]);
    return code;
  }

  OracleMode mode_;
  std::size_t k_;
  std::vector<int> owner_;
  std::size_t s_ = 0;
  std::vector<int> target_, counts_;
  std::size_t radix_ = 1;
  std::vector<bool> member_;
};

// Upper bound on the count of any subspace with the given pivot set.
// Columns left of the first pivot vanish on the whole subspace, and a member
// is determined by its pivot coordinates.
BigInt pivot_bound(const OracleQuery& q, std::size_t big_n, std::span<const std::size_t> pivots) {
  const std::size_t r = pivots.size();
  const std::size_t z = r == 0 ? big_n : pivots[0];
  const BigInt qm1 = q.field.order() - 1;
  auto labelled_sum = [&](std::size_t positions, std::size_t max_nonzero) {
    std::size_t labels = 0;
    for (const auto& l : q.labels->lists()) labels += l.size();
    BigInt total = 0;
    for (std::size_t i = 0; i <= std::min(max_nonzero, positions); ++i)
      total += binomial(static_cast<std::int64_t>(positions), static_cast<std::int64_t>(i)) *
               ipow(BigInt(labels), i);
    return total;
  };
  switch (q.mode) {
    case OracleMode::weight: {
      const auto k = static_cast<std::size_t>(q.k);
      if (big_n - z < k) return 0;
      BigInt total = 0;
      for (std::size_t i = 0; i <= std::min(k, r); ++i)
        total += binomial(static_cast<std::int64_t>(r), static_cast<std::int64_t>(i)) * ipow(qm1, i);
      return total;
    }
    case OracleMode::coweight: {
      const auto k = static_cast<std::size_t>(q.k);
      if (z > k) return 0;
      BigInt total = 0;
      for (std::size_t i = 0; i <= std::min(k - z, r); ++i)
        total += binomial(static_cast<std::int64_t>(r), static_cast<std::int64_t>(i)) * ipow(qm1, r - i);
      return total;
    }
    case OracleMode::labeled: {
      const auto norm = static_cast<std::size_t>(q.kappa->norm());
      if (big_n - z < norm) return 0;
      return labelled_sum(r, norm);
    }
    case OracleMode::downset:
      return labelled_sum(r, static_cast<std::size_t>(q.downset->max_norm()));
    case OracleMode::affine: {
      if (r == 0 || pivots[0] != 0) return 0;  // first coordinate identically zero
      return labelled_sum(r - 1, static_cast<std::size_t>(q.kappa->norm()));
    }
  }
  return 0;
}

struct ThreadState {
  std::size_t best = 0;
  std::uint64_t best_count = 0;
  std::set<Key> kept;
  std::uint64_t scanned = 0;
  std::uint64_t pruned = 0;
};

class LengthScan {
 public:
  LengthScan(const OracleQuery& q, std::size_t n)
      : q_(q), n_(n), big_n_(q.mode == OracleMode::affine ? n + 1 : n), r_(static_cast<std::size_t>(q.r)) {}

  std::size_t ambient() const { return big_n_; }

  void run_slice(const std::vector<std::vector<std::size_t>>& pivsets, std::size_t first, std::size_t stride,
                 ThreadState& st) const {
    Qualifier qualifies(q_);
    const int qo = q_.field.order();
    const Field& f = q_.field;
    std::vector<Elem> basis(r_ * big_n_);
    std::vector<std::vector<Elem>> partial(r_ + 1, std::vector<Elem>(big_n_, 0));
    std::vector<int> coef(r_);

    for (std::size_t idx = first; idx < pivsets.size(); idx += stride) {
      const auto& piv = pivsets[idx];
      const auto frees = free_positions(big_n_, piv);
      if (q_.prune && st.best > 0 && pivot_bound(q_, big_n_, piv) < st.best) {
        st.pruned += to_u64_saturating(ipow(BigInt(qo), frees.size()));
        continue;
      }
      std::fill(basis.begin(), basis.end(), 0);
      for (std::size_t i = 0; i < r_; ++i) basis[i * big_n_ + piv[i]] = 1;
      std::vector<int> fill(frees.size(), 0);
      while (true) {
        const std::size_t count = count_members(basis, partial, coef, qualifies, f);
        ++st.scanned;
        if (count > st.best) {
          st.best = count;
          st.best_count = 0;
          st.kept.clear();
        }
        if (count == st.best) {
          ++st.best_count;
          st.kept.insert(basis);
          if (st.kept.size() > q_.witness_limit) st.kept.erase(std::prev(st.kept.end()));
        }
        std::size_t t = frees.size();
        bool done = true;
        while (t > 0) {
          --t;
          auto [i, j] = frees[t];
          if (++fill[t] < qo) {
            basis[i * big_n_ + j] = static_cast<Elem>(fill[t]);
            done = false;
            break;
          }
          fill[t] = 0;
          basis[i * big_n_ + j] = 0;
        }
        if (done) break;
      }
    }
  }

  std::size_t count_members(const std::vector<Elem>& basis, std::vector<std::vector<Elem>>& partial,
                            std::vector<int>& coef, Qualifier& qualifies, const Field& f) const {
    const int qo = f.order();
    std::fill(coef.begin(), coef.end(), 0);
    auto rebuild_from = [&](std::size_t t) {
      for (std::size_t i = t; i < r_; ++i) {
        const Elem c = static_cast<Elem>(coef[i]);
        const Elem* b = basis.data() + i * big_n_;
        for (std::size_t j = 0; j < big_n_; ++j) partial[i + 1][j] = f.add(partial[i][j], f.mul(c, b[j]));
      }
    };
    rebuild_from(0);
    std::size_t count = 0;
    while (true) {
      if (qualifies(partial[r_])) ++count;
      std::size_t t = r_;
      bool done = true;
      while (t > 0) {
        --t;
        if (++coef[t] < qo) {
          done = false;
          break;
        }
        coef[t] = 0;
      }
      if (done) break;
      rebuild_from(t);
    }
    return count;
  }

 private:
  const OracleQuery& q_;
  std::size_t n_, big_n_, r_;
};

void validate(const OracleQuery& q) {
  if (q.r < 0) fail(Errc::invalid_argument, "r must be nonnegative");
  if (q.k < 0) fail(Errc::invalid_argument, "k must be nonnegative");
  if (q.n_list.empty()) fail(Errc::invalid_argument, "n_list is empty");
  if (q.threads == 0) fail(Errc::invalid_argument, "thread count must be positive");
  if (q.budget.subspaces == 0 || q.budget.members == 0) fail(Errc::invalid_argument, "budgets must be positive");
  const auto r = static_cast<std::size_t>(q.r);
  for (std::size_t n : q.n_list) {
    const std::size_t big_n = q.mode == OracleMode::affine ? n + 1 : n;
    if (r > big_n)
      fail(Errc::invalid_argument, "length " + std::to_string(n) + " too short for rank bound " + std::to_string(r));
  }
  const bool needs_labels = q.mode == OracleMode::labeled || q.mode == OracleMode::affine || q.mode == OracleMode::downset;
  if (!needs_labels) return;
  if (!q.labels) fail(Errc::invalid_argument, "mode requires a label system");
  if (!(q.labels->field() == q.field)) fail(Errc::field_mismatch, "label system field differs from query field");
  if (q.mode == OracleMode::downset) {
    if (!q.downset) fail(Errc::invalid_argument, "downset mode requires a down-set");
    if (!q.downset->empty() && q.downset->width() != q.labels->size())
      fail(Errc::length_mismatch, "down-set width does not match label system");
  } else {
    if (!q.kappa) fail(Errc::invalid_argument, "mode requires a weight profile");
    if (q.kappa->size() != q.labels->size()) fail(Errc::length_mismatch, "profile length does not match label system");
  }
}

Subspace subspace_from_key(const Field& f, std::size_t r, std::size_t big_n, const Key& key) {
  std::vector<std::size_t> pivots;
  for (std::size_t i = 0; i < r; ++i) {
    std::size_t j = 0;
    while (key[i * big_n + j] == 0) ++j;
    pivots.push_back(j);
  }
  return Subspace::from_canonical(Matrix(f, r, big_n, key), std::move(pivots));
}

Witness make_witness(const OracleQuery& q, std::size_t n, Subspace w) {
  Qualifier qualifies(q);
  const bool affine = q.mode == OracleMode::affine;
  std::vector<std::vector<Elem>> counted;
  std::vector<bool> in_support(n, false);
  Budget unlimited{~0ull, ~0ull};
  for_each_member(w, unlimited, [&](std::span<const Elem> x) {
    if (!qualifies(x)) return;
    auto v = affine ? x.subspan(1) : x;
    for (std::size_t i = 0; i < n; ++i)
      if (v[i] != 0) in_support[i] = true;
    counted.emplace_back(v.begin(), v.end());
  });
  std::vector<std::size_t> support;
  for (std::size_t i = 0; i < n; ++i)
    if (in_support[i]) support.push_back(i);
  return Witness{n, std::move(w), std::move(counted), std::move(support)};
}

}  // namespace

const char* oracle_mode_name(OracleMode m) noexcept {
  switch (m) {
    case OracleMode::weight: return "weight";
    case OracleMode::coweight: return "coweight";
    case OracleMode::labeled: return "labeled";
    case OracleMode::downset: return "downset";
    case OracleMode::affine: return "affine";
  }
  return "?";
}

std::optional<OracleMode> parse_oracle_mode(std::string_view name) noexcept {
  for (auto m : {OracleMode::weight, OracleMode::coweight, OracleMode::labeled, OracleMode::downset, OracleMode::affine})
    if (name == oracle_mode_name(m)) return m;
  return std::nullopt;
}

std::vector<std::size_t> default_n_list(OracleMode mode, int r) {
  const auto rr = static_cast<std::size_t>(std::max(r, 0));
  const std::size_t lo = (mode == OracleMode::affine && rr > 0) ? rr - 1 : rr;
  std::vector<std::size_t> out;
  for (std::size_t n = lo; n <= rr + 2; ++n) out.push_back(n);
  return out;
}

OracleResult run_oracle(const OracleQuery& query) {
  validate(query);
  std::vector<std::size_t> lengths = query.n_list;
  std::sort(lengths.begin(), lengths.end());
  lengths.erase(std::unique(lengths.begin(), lengths.end()), lengths.end());
  const auto r = static_cast<std::size_t>(query.r);
  const int qo = query.field.order();

  if (ipow(BigInt(qo), r) > query.budget.members)
    fail(Errc::budget_exceeded, "q^r members per subspace exceeds budget " + std::to_string(query.budget.members));

  // Decide which lengths fit the subspace budget (summed over the call).
  std::vector<bool> skip(lengths.size(), false);
  BigInt total = 0;
  for (std::size_t i = 0; i < lengths.size(); ++i) {
    const std::size_t big_n = query.mode == OracleMode::affine ? lengths[i] + 1 : lengths[i];
    const BigInt here = gaussian_binomial(qo, big_n, r);
    if (total + here > query.budget.subspaces) {
      if (!query.skip_over_budget)
        fail(Errc::budget_exceeded, "scan of " + to_decimal(total + here) + " subspaces exceeds budget " +
                                        std::to_string(query.budget.subspaces));
      skip[i] = true;
      continue;
    }
    total += here;
  }

  OracleResult result;
  result.exhaustive = true;
  std::vector<std::pair<std::size_t, std::set<Key>>> kept_by_length;
  for (std::size_t li = 0; li < lengths.size(); ++li) {
    const std::size_t n = lengths[li];
    PerLength pl;
    pl.n = n;
    if (skip[li]) {
      pl.skipped = true;
      result.exhaustive = false;
      result.per_n.push_back(pl);
      kept_by_length.emplace_back(n, std::set<Key>{});
      continue;
    }
    LengthScan scan(query, n);
    const auto pivsets = pivot_sets(scan.ambient(), r);
    const std::size_t nthreads = std::max<std::size_t>(1, std::min<std::size_t>(query.threads, pivsets.size()));
    std::vector<ThreadState> states(nthreads);
    if (nthreads == 1) {
      scan.run_slice(pivsets, 0, 1, states[0]);
    } else {
      std::vector<std::thread> pool;
      for (std::size_t t = 0; t < nthreads; ++t)
        pool.emplace_back([&, t] { scan.run_slice(pivsets, t, nthreads, states[t]); });
      for (auto& th : pool) th.join();
    }
    std::set<Key> kept;
    for (const auto& st : states) {
      pl.subspaces_scanned += st.scanned;
      pl.subspaces_pruned += st.pruned;
      if (st.scanned > 0) pl.max_count = std::max(pl.max_count, st.best);
    }
    for (auto& st : states) {
      if (st.scanned == 0 || st.best != pl.max_count) continue;
      pl.witness_count += st.best_count;
      kept.insert(st.kept.begin(), st.kept.end());
    }
    while (kept.size() > query.witness_limit) kept.erase(std::prev(kept.end()));
    result.per_n.push_back(pl);
    kept_by_length.emplace_back(n, std::move(kept));
  }

  bool any = false;
  for (const auto& pl : result.per_n) {
    if (pl.skipped) continue;
    if (!any || pl.max_count > result.max_count) {
      result.max_count = pl.max_count;
      result.best_n = pl.n;
    }
    any = true;
  }
  std::vector<std::pair<std::size_t, Key>> all_kept;
  for (std::size_t li = 0; li < result.per_n.size(); ++li) {
    const auto& pl = result.per_n[li];
    if (pl.skipped || pl.max_count != result.max_count) continue;
    result.witness_count += pl.witness_count;
    for (const auto& key : kept_by_length[li].second) all_kept.emplace_back(pl.n, key);
  }

  result.witnesses_truncated = result.witness_count > query.witness_limit;
  if (all_kept.size() > query.witness_limit) all_kept.resize(query.witness_limit);
  for (const auto& [n, key] : all_kept) {
    const std::size_t big_n = query.mode == OracleMode::affine ? n + 1 : n;
    result.witnesses.push_back(make_witness(query, n, subspace_from_key(query.field, r, big_n, key)));
  }
  return result;
}

namespace {
OracleResult run_checked(const OracleQuery& q, OracleMode expected) {
  if (q.mode != expected)
    fail(Errc::invalid_argument, std::string("query mode must be ") + oracle_mode_name(expected));
  return run_oracle(q);
}
}  // namespace

OracleResult oracle_ex(const OracleQuery& q) { return run_checked(q, OracleMode::weight); }
OracleResult oracle_coex(const OracleQuery& q) { return run_checked(q, OracleMode::coweight); }
OracleResult oracle_labeled(const OracleQuery& q) { return run_checked(q, OracleMode::labeled); }
OracleResult oracle_aex(const OracleQuery& q) { return run_checked(q, OracleMode::affine); }
OracleResult oracle_downset(const OracleQuery& q) { return run_checked(q, OracleMode::downset); }

std::vector<std::vector<Elem>> canonical_column_set(const Field& field, const std::vector<std::vector<Elem>>& columns,
                                                    std::size_t n_rows) {
  const int qo = field.order();
  std::vector<std::size_t> perm(n_rows);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<Elem>> best, cur(columns.size(), std::vector<Elem>(n_rows));
  bool have_best = false;
  std::vector<int> scale(n_rows);
  do {
    std::fill(scale.begin(), scale.end(), 1);
    while (true) {
      for (std::size_t c = 0; c < columns.size(); ++c)
        for (std::size_t i = 0; i < n_rows; ++i)
          cur[c][i] = field.mul(static_cast<Elem>(scale[i]), columns[c][perm[i]]);
      std::sort(cur.begin(), cur.end());
      if (!have_best || cur < best) {
        best = cur;
        have_best = true;
      }
      std::size_t t = n_rows;
      bool done = true;
      while (t > 0) {
        --t;
        if (++scale[t] < qo) {
          done = false;
          break;
        }
        scale[t] = 1;
      }
      if (done) break;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

UniquenessReport check_uniqueness(const OracleResult& result, std::size_t expected_support, SupportMeasure measure,
                                  std::uint64_t max_group_size) {
  if (!result.exhaustive) fail(Errc::not_exhaustive, "oracle scan skipped some lengths");
  if (result.witnesses.empty()) fail(Errc::not_exhaustive, "no witnesses to check");
  if (result.witnesses_truncated) fail(Errc::not_exhaustive, "witness list was truncated");

  UniquenessReport rep;
  rep.expected_support = expected_support;
  rep.all_supports_match = true;
  rep.symmetry_checked = true;
  std::set<std::vector<std::vector<Elem>>> classes;

  for (const auto& w : result.witnesses) {
    const Field& f = w.subspace.field();
    // Reduced rows of the counted collection.
    std::vector<std::vector<Elem>> rows;
    std::set<std::vector<Elem>> seen_classes;
    for (std::size_t i = 0; i < w.n; ++i) {
      std::vector<Elem> row(w.counted.size());
      for (std::size_t c = 0; c < w.counted.size(); ++c) row[c] = w.counted[c][i];
      auto lead = std::find_if(row.begin(), row.end(), [](Elem e) { return e != 0; });
      if (lead == row.end()) continue;
      if (measure == SupportMeasure::row_classes) {
        const Elem s = f.inv(*lead);
        std::vector<Elem> normal(row.size());
        for (std::size_t c = 0; c < row.size(); ++c) normal[c] = f.mul(s, row[c]);
        if (!seen_classes.insert(std::move(normal)).second) continue;
      }
      rows.push_back(std::move(row));
    }
    const std::size_t support = rows.size();
    rep.supports.push_back(support);
    if (support != expected_support) rep.all_supports_match = false;

    BigInt group = 1;
    for (std::size_t i = 2; i <= support; ++i) group *= i;
    group *= ipow(BigInt(f.order() - 1), support);
    if (group > max_group_size) {
      rep.symmetry_checked = false;
      continue;
    }
    std::vector<std::vector<Elem>> cols(w.counted.size(), std::vector<Elem>(support));
    for (std::size_t c = 0; c < w.counted.size(); ++c)
      for (std::size_t i = 0; i < support; ++i) cols[c][i] = rows[i][c];
    // canonical_column_set treats each column's entries as rows 0..support-1
    classes.insert(canonical_column_set(f, cols, support));
  }
  if (rep.symmetry_checked) {
    rep.symmetry_classes = classes.size();
    rep.unique_up_to_symmetry = classes.size() == 1;
  }
  return rep;
}

RecursionReport verify_recursion(const LabelSystem& labels, const WeightProfile& kappa, const std::vector<int>& r_values,
                                 const Budget& budget, unsigned threads, std::size_t n_extra) {
  if (kappa.size() != labels.size()) fail(Errc::length_mismatch, "profile length does not match label system");
  RecursionReport rep;
  const int shift = labels.varies(kappa) ? 1 : 0;

  auto key_of = [](int r, const WeightProfile& p) {
    std::string key = std::to_string(r) + "|";
    for (std::size_t i = 0; i < p.size(); ++i) key += (i ? "," : "") + std::to_string(p[i]);
    return key;
  };
  auto aex_star = [&](int r, const WeightProfile& p) -> std::size_t {
    const int rr = r + shift;
    if (rr < 0) return 0;
    const std::string key = key_of(r, p);
    if (auto it = rep.values.find(key); it != rep.values.end()) return it->second;
    OracleQuery q;
    q.field = labels.field();
    q.mode = OracleMode::affine;
    q.r = rr;
    q.labels = labels;
    q.kappa = p;
    q.budget = budget;
    q.threads = threads;
    q.witness_limit = 1;
    const std::size_t lo = static_cast<std::size_t>(std::max({rr - 1, p.norm(), 0}));
    for (std::size_t n = lo; n <= static_cast<std::size_t>(rr) + n_extra; ++n) q.n_list.push_back(n);
    const std::size_t v = run_oracle(q).max_count;
    rep.values.emplace(key, v);
    return v;
  };

  for (int r : r_values) {
    RecursionRow row;
    row.r = r;
    row.guaranteed = r >= kappa.norm() + 2;
    row.lhs = aex_star(r, kappa);
    BigInt rhs = aex_star(r - 1, kappa);
    for (std::size_t i = 0; i < kappa.size(); ++i) {
      auto lower = kappa.minus_unit(i);
      if (!lower) continue;  // no vectors with a negative count
      rhs += BigInt(labels.list(i).size()) * aex_star(r - 1, *lower);
    }
    row.rhs = rhs;
    row.holds = row.lhs <= row.rhs;
    if (row.guaranteed && !row.holds) rep.holds_where_guaranteed = false;
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

}  // namespace gfx
