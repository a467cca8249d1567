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

#include "constructions.hpp"

#include <algorithm>
#include <string>

#include "error.hpp"
#include "formulas.hpp"

namespace gfx {
namespace {

struct Family {
  LabelSystem labels;
  WeightProfile kappa;
  std::size_t rows;
};

void require_labels(const ConstructionParams& p) {
  if (!p.labels || !p.kappa) fail(Errc::invalid_argument, "labeled constructions need a label system and a profile");
  if (p.labels->field().order() != p.q) fail(Errc::field_mismatch, "label system field differs from q");
  if (p.kappa->size() != p.labels->size()) fail(Errc::length_mismatch, "profile length does not match label system");
}

// Profile family behind every builder except the dual Hamming code.
Family family_of(const ConstructionParams& p) {
  if (p.r < 0) fail(Errc::invalid_argument, "r must be nonnegative");
  const Field field = Field::make(p.q);
  switch (p.kind) {
    case ConstructionKind::weight: {
      if (p.k < 0 || p.k > p.r) fail(Errc::invalid_argument, "weight family needs 0 <= k <= r");
      const bool lifted = p.q == 2 && p.k > 0 && p.k % 2 == 0;
      return {LabelSystem::all_nonzero(field), WeightProfile({p.k}), static_cast<std::size_t>(p.r) + (lifted ? 1 : 0)};
    }
    case ConstructionKind::coweight: {
      if (p.q == 2 && p.k >= 1) fail(Errc::unsupported, "F_q != F_2 required for co-weight k >= 1");
      if (p.k < 0 || p.k > p.r) fail(Errc::invalid_argument, "co-weight family needs 0 <= k <= r");
      return {LabelSystem::all_nonzero(field), WeightProfile({p.r - p.k}), static_cast<std::size_t>(p.r)};
    }
    case ConstructionKind::labeled: {
      require_labels(p);
      const auto& l = *p.labels;
      const auto& kappa = *p.kappa;
      const bool lifted = kappa.norm() > 0 && !l.varies(kappa) && l.singleton_sum(kappa) == 0;
      const std::size_t n = static_cast<std::size_t>(p.r) + (lifted ? 1 : 0);
      if (kappa.norm() > p.r) fail(Errc::profile_too_heavy, "profile norm exceeds r");
      return {l, kappa, n};
    }
    case ConstructionKind::affine: {
      require_labels(p);
      const auto& l = *p.labels;
      const auto& kappa = *p.kappa;
      const bool varies = l.varies(kappa);
      if (kappa.norm() > p.r - (varies ? 1 : 0))
        fail(Errc::profile_too_heavy, "profile does not fit the affine family's support");
      return {l, kappa, static_cast<std::size_t>(p.r - (varies ? 1 : 0))};
    }
    case ConstructionKind::dual_hamming:
      break;
  }
  fail(Errc::invalid_argument, "no profile family for this construction");
}

BigInt claimed_columns(const ConstructionParams& p) {
  switch (p.kind) {
    case ConstructionKind::weight: return ex_formula(p.q, p.r, p.k).value;
    case ConstructionKind::coweight: return coex_formula(p.q, p.r, p.k).value;
    case ConstructionKind::labeled: return ex_labeled_formula(*p.labels, p.r, *p.kappa).value;
    case ConstructionKind::affine: return aex_formula(*p.labels, p.r, *p.kappa).value;
    case ConstructionKind::dual_hamming: return hamming_params(p.q, p.r).length;
  }
  return 0;
}

std::string id_of(const ConstructionParams& p) {
  std::string id = construction_name(p.kind);
  id += ":q=" + std::to_string(p.q) + ":r=" + std::to_string(p.r);
  if (p.kind == ConstructionKind::weight || p.kind == ConstructionKind::coweight) id += ":k=" + std::to_string(p.k);
  if (p.kappa) {
    id += ":kappa=";
    for (std::size_t i = 0; i < p.kappa->size(); ++i) id += (i ? "," : "") + std::to_string((*p.kappa)[i]);
  }
  return id;
}

std::size_t nonzero_rows(const Matrix& m) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    auto row = m.row(i);
    if (std::any_of(row.begin(), row.end(), [](Elem e) { return e != 0; })) ++count;
  }
  return count;
}

}  // namespace

const char* construction_name(ConstructionKind kind) noexcept {
  switch (kind) {
    case ConstructionKind::weight: return "weight";
    case ConstructionKind::coweight: return "coweight";
    case ConstructionKind::labeled: return "labeled";
    case ConstructionKind::affine: return "affine";
    case ConstructionKind::dual_hamming: return "dual-hamming";
  }
  return "?";
}

std::optional<ConstructionKind> parse_construction_kind(std::string_view name) noexcept {
  for (auto k : {ConstructionKind::weight, ConstructionKind::coweight, ConstructionKind::labeled,
                 ConstructionKind::affine, ConstructionKind::dual_hamming})
    if (name == construction_name(k)) return k;
  return std::nullopt;
}

bool ConstructionReport::verified() const {
  const std::size_t bounded = claimed.affine_bound ? measured.a_rank : measured.rank;
  return measured.distinct_columns && measured.members_ok && BigInt(measured.columns) == claimed.columns &&
         measured.rows == claimed.rows && measured.rank == claimed.rank && measured.a_rank == claimed.a_rank &&
         measured.support == claimed.support && bounded <= claimed.rank_bound;
}

SpanRanks all_profile_vectors_ranks(std::size_t n, const LabelSystem& labels, const WeightProfile& kappa) {
  const auto norm = static_cast<std::size_t>(kappa.norm());
  if (norm > n) fail(Errc::profile_too_heavy, "profile norm exceeds length");
  if (norm == 0) return {0, 1};
  // Two vectors differing in one varying position differ by a multiple of a
  // unit vector, so the difference space is everything.
  if (labels.varies(kappa)) return {n, n + 1};
  std::size_t used = 0;
  for (std::size_t i = 0; i < kappa.size(); ++i)
    if (kappa[i] > 0) ++used;
  if (norm == n && used == 1) return {1, 1};
  // Otherwise the differences span exactly the zero-sum hyperplane.
  const std::size_t rank = labels.singleton_sum(kappa) == 0 ? n - 1 : n;
  return {rank, n};
}

ConstructionClaims claims_for(const ConstructionParams& p) {
  ConstructionClaims c;
  c.rank_bound = static_cast<std::size_t>(p.r);
  c.affine_bound = p.kind == ConstructionKind::affine;
  c.columns = claimed_columns(p);
  if (p.kind == ConstructionKind::dual_hamming) {
    const std::size_t qr = to_u64_saturating(ipow(BigInt(p.q), static_cast<std::uint64_t>(p.r)));
    c.rows = qr;
    c.rank = static_cast<std::size_t>(p.r);
    // The all-ones functional is linear on the nonzero coefficient vectors
    // only when there is a single one of them.
    c.a_rank = (p.q == 2 && p.r == 1) ? 1 : c.rank + 1;
    c.support = qr - 1;
    return c;
  }
  const Family fam = family_of(p);
  const SpanRanks sr = all_profile_vectors_ranks(fam.rows, fam.labels, fam.kappa);
  c.rows = fam.rows;
  c.rank = sr.rank;
  c.a_rank = sr.a_rank;
  c.support = fam.kappa.norm() > 0 ? fam.rows : 0;
  return c;
}

ConstructionMeasurement measure(const Matrix& m, const ConstructionParams& p) {
  ConstructionMeasurement out;
  out.columns = m.cols();
  out.rows = m.rows();
  auto cols = m.columns();
  std::vector<std::vector<Elem>> sorted = cols;
  std::sort(sorted.begin(), sorted.end());
  out.distinct_columns = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
  out.rank = rank(m);
  out.a_rank = a_rank(m);
  out.support = nonzero_rows(m);

  if (p.kind == ConstructionKind::dual_hamming) {
    const BigInt w = hamming_params(p.q, p.r).weight;
    out.members_ok = std::all_of(cols.begin(), cols.end(), [&](const auto& c) { return BigInt(weight(c)) == w; });
    return out;
  }
  const Family fam = family_of(p);
  out.members_ok = std::all_of(cols.begin(), cols.end(), [&](const auto& c) {
    auto prof = profile_of(std::span<const Elem>(c), fam.labels);
    return prof && *prof == fam.kappa;
  });
  return out;
}

ConstructionReport certify(Matrix m, const ConstructionParams& params) {
  if (m.field().order() != params.q) fail(Errc::field_mismatch, "matrix field differs from construction q");
  ConstructionClaims claims = claims_for(params);
  ConstructionMeasurement meas = measure(m, params);
  return ConstructionReport{std::move(m), params, id_of(params), std::move(claims), meas};
}

ConstructionReport build(const ConstructionParams& p, const Budget& budget) {
  const Field field = Field::make(p.q);
  if (p.kind == ConstructionKind::dual_hamming) {
    if (p.r < 1) fail(Errc::invalid_argument, "dual Hamming code needs r >= 1");
    const BigInt total = ipow(BigInt(p.q), static_cast<std::uint64_t>(p.r));
    if (total > budget.members)
      fail(Errc::budget_exceeded, "q^r = " + to_decimal(total) + " exceeds budget " + std::to_string(budget.members));
    const auto rows = total.convert_to<std::size_t>();
    const auto r = static_cast<std::size_t>(p.r);
    // Row t of A is the base-q expansion of t, first coordinate most significant.
    Matrix a(field, rows, r);
    for (std::size_t t = 0; t < rows; ++t) {
      std::size_t v = t;
      for (std::size_t j = r; j-- > 0;) {
        a(t, j) = static_cast<Elem>(v % static_cast<std::size_t>(p.q));
        v /= static_cast<std::size_t>(p.q);
      }
    }
    std::vector<std::vector<Elem>> cols;
    cols.reserve(rows - 1);
    for (std::size_t t = 1; t < rows; ++t) {
      auto lambda = a.row(t);
      std::vector<Elem> col(rows);
      for (std::size_t i = 0; i < rows; ++i) col[i] = dot(field, a.row(i), lambda);
      cols.push_back(std::move(col));
    }
    return certify(Matrix::from_columns(field, rows, cols), p);
  }
  const Family fam = family_of(p);
  std::vector<std::vector<Elem>> cols;
  for_each_profile_vector(fam.rows, fam.labels, fam.kappa,
                          [&](std::span<const Elem> v) { cols.emplace_back(v.begin(), v.end()); });
  return certify(Matrix::from_columns(field, fam.rows, cols), p);
}

ConstructionReport build_weight_family(int q, int r, int k) {
  return build({ConstructionKind::weight, q, r, k, std::nullopt, std::nullopt});
}

ConstructionReport build_coweight_family(int q, int r, int k) {
  return build({ConstructionKind::coweight, q, r, k, std::nullopt, std::nullopt});
}

ConstructionReport build_labeled_family(const LabelSystem& labels, int r, const WeightProfile& kappa) {
  return build({ConstructionKind::labeled, labels.field().order(), r, 0, labels, kappa});
}

ConstructionReport build_affine_family(const LabelSystem& labels, int r, const WeightProfile& kappa) {
  return build({ConstructionKind::affine, labels.field().order(), r, 0, labels, kappa});
}

ConstructionReport build_dual_hamming(int q, int r, const Budget& budget) {
  return build({ConstructionKind::dual_hamming, q, r, 0, std::nullopt, std::nullopt}, budget);
}

}  // namespace gfx
