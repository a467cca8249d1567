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

#include <cstddef>
#include <optional>
#include <string>

#include "bigint.hpp"
#include "linalg.hpp"
#include "vectors.hpp"

namespace gfx {

enum class ConstructionKind { weight, coweight, labeled, affine, dual_hamming };

const char* construction_name(ConstructionKind kind) noexcept;
std::optional<ConstructionKind> parse_construction_kind(std::string_view name) noexcept;

struct ConstructionParams {
  ConstructionKind kind = ConstructionKind::weight;
  int q = 2;
  int r = 0;
  int k = 0;                           // weight and coweight families
  std::optional<LabelSystem> labels;   // labeled and affine families
  std::optional<WeightProfile> kappa;  // labeled and affine families
};

/// What the theory says the family looks like.
struct ConstructionClaims {
  BigInt columns;
  std::size_t rows = 0;
  std::size_t rank = 0;
  std::size_t a_rank = 0;
  std::size_t support = 0;     // nonzero rows
  std::size_t rank_bound = 0;  // r
  bool affine_bound = false;   // the bound applies to a-rank rather than rank
};

/// What linalg finds on the actual matrix.
struct ConstructionMeasurement {
  std::size_t columns = 0;
  std::size_t rows = 0;
  bool distinct_columns = false;
  bool members_ok = false;  // every column has the family's weight/profile
  std::size_t rank = 0;
  std::size_t a_rank = 0;
  std::size_t support = 0;
};

struct ConstructionReport {
  Matrix matrix;
  ConstructionParams params;
  std::string construction_id;
  ConstructionClaims claimed;
  ConstructionMeasurement measured;

  /// All measured quantities equal the claims and the rank bound holds.
  bool verified() const;
};

/// Rank and a-rank of the set of all (L, kappa)-vectors of length n.
struct SpanRanks {
  std::size_t rank;
  std::size_t a_rank;
};
SpanRanks all_profile_vectors_ranks(std::size_t n, const LabelSystem& labels, const WeightProfile& kappa);

ConstructionClaims claims_for(const ConstructionParams& params);
ConstructionMeasurement measure(const Matrix& m, const ConstructionParams& params);
/// Re-derives the full report for an existing matrix.
ConstructionReport certify(Matrix m, const ConstructionParams& params);

ConstructionReport build(const ConstructionParams& params, const Budget& budget = {});

/// All weight-k columns on r rows, or on r + 1 rows when q = 2 and k > 0 is even.
ConstructionReport build_weight_family(int q, int r, int k);
/// All columns of length r with exactly k zeros.
ConstructionReport build_coweight_family(int q, int r, int k);
/// All (L, kappa)-vectors on r + 1 rows (singleton lists with zero label sum) or r rows.
ConstructionReport build_labeled_family(const LabelSystem& labels, int r, const WeightProfile& kappa);
/// All (L, kappa)-vectors on r rows (singleton lists) or r - 1 rows.
ConstructionReport build_affine_family(const LabelSystem& labels, int r, const WeightProfile& kappa);
/// Rows: all of GF(q)^r in lexicographic order; columns: every nonzero
/// vector of the column space, coefficient vectors in lexicographic order.
ConstructionReport build_dual_hamming(int q, int r, const Budget& budget = {});

}  // namespace gfx
