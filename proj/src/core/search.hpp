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
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bigint.hpp"
#include "linalg.hpp"
#include "vectors.hpp"

namespace gfx {

enum class OracleMode { weight, coweight, labeled, downset, affine };

const char* oracle_mode_name(OracleMode m) noexcept;
std::optional<OracleMode> parse_oracle_mode(std::string_view name) noexcept;

/// One exhaustive maximization: over every n in n_list and every
/// r-dimensional subspace W of GF(q)^n (GF(q)^{1+n} in affine mode), count
/// the members of W that qualify and keep the maxima.
///
/// A set of distinct vectors has rank <= r iff it lies in some r-dimensional
/// subspace (given n >= r); a-rank <= r iff the vectors with a 1 prepended do.
struct OracleQuery {
  Field field = Field::make(2);
  OracleMode mode = OracleMode::weight;
  int r = 0;
  int k = 0;
  std::optional<LabelSystem> labels;
  std::optional<WeightProfile> kappa;
  std::optional<ProfileDownSet> downset;
  std::vector<std::size_t> n_list;

  Budget budget;
  unsigned threads = 1;
  std::size_t witness_limit = 10'000;
  bool prune = true;
  /// Skip lengths whose scan would exceed the budget instead of failing;
  /// the result is then marked non-exhaustive.
  bool skip_over_budget = false;
};

/// {r, r+1, r+2}; affine mode starts at max(r-1, 0).
std::vector<std::size_t> default_n_list(OracleMode mode, int r);

struct Witness {
  std::size_t n = 0;
  Subspace subspace;
  /// Counted vectors (length n) in member-enumeration order.
  std::vector<std::vector<Elem>> counted;
  /// Coordinates where some counted vector is nonzero.
  std::vector<std::size_t> support;
};

struct PerLength {
  std::size_t n = 0;
  std::size_t max_count = 0;
  std::uint64_t witness_count = 0;
  std::uint64_t subspaces_scanned = 0;
  std::uint64_t subspaces_pruned = 0;
  bool skipped = false;
};

struct OracleResult {
  std::size_t max_count = 0;
  std::size_t best_n = 0;
  std::vector<Witness> witnesses;  // sorted by (n, RREF entries)
  std::uint64_t witness_count = 0;
  bool witnesses_truncated = false;
  std::vector<PerLength> per_n;
  bool exhaustive = false;
};

OracleResult run_oracle(const OracleQuery& query);

/// Mode-checked entry points; each throws Errc::invalid_argument on a
/// query of another mode.
OracleResult oracle_ex(const OracleQuery& query);
OracleResult oracle_coex(const OracleQuery& query);
OracleResult oracle_labeled(const OracleQuery& query);
OracleResult oracle_aex(const OracleQuery& query);
OracleResult oracle_downset(const OracleQuery& query);

/// How witness supports are measured.
enum class SupportMeasure {
  nonzero_rows,  // rows where some counted vector is nonzero
  row_classes,   // nonzero rows up to nonzero scalar multiples
};

struct UniquenessReport {
  std::size_t expected_support = 0;
  std::vector<std::size_t> supports;  // one per witness
  bool all_supports_match = false;
  /// Classes of witnesses up to coordinate permutation and nonzero scaling
  /// of coordinates, after dropping zero rows (and, for row_classes,
  /// repeated rows up to scaling).
  bool symmetry_checked = false;
  std::size_t symmetry_classes = 0;
  bool unique_up_to_symmetry = false;
};

/// Throws Errc::not_exhaustive for partial scans, truncated or empty witness lists.
UniquenessReport check_uniqueness(const OracleResult& result, std::size_t expected_support,
                                  SupportMeasure measure = SupportMeasure::nonzero_rows,
                                  std::uint64_t max_group_size = 200'000);

/// Canonical representative of a column set under row permutations and
/// nonzero row scalings. Rows are the coordinates.
std::vector<std::vector<Elem>> canonical_column_set(const Field& field, const std::vector<std::vector<Elem>>& rows_by_cols,
                                                    std::size_t n_rows);

struct RecursionRow {
  int r = 0;
  BigInt lhs;  // aex*(r, kappa)
  BigInt rhs;  // aex*(r-1, kappa) + sum_i |L_i| aex*(r-1, kappa - e_i)
  bool holds = false;
  bool guaranteed = false;  // r >= |kappa| + 2
};

struct RecursionReport {
  std::vector<RecursionRow> rows;
  /// aex*(r', kappa') values used, keyed by "r'|k_1,...,k_s".
  std::map<std::string, std::size_t> values;
  bool holds_where_guaranteed = true;
};

/// aex*(r, kappa) = aex(r + [some used list has > 1 label], kappa).
/// Each value comes from oracle_aex over n in {r'-1, ..., r'+n_extra}.
RecursionReport verify_recursion(const LabelSystem& labels, const WeightProfile& kappa, const std::vector<int>& r_values,
                                 const Budget& budget = {}, unsigned threads = 1, std::size_t n_extra = 2);

}  // namespace gfx
