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

#include <cstdint>
#include <string>
#include <vector>

#include "bigint.hpp"
#include "vectors.hpp"

namespace gfx {

enum class Applicability {
  proven_for_large_r,  // equality only beyond an unspecified threshold in r
  exact_for_all_r,
};

const char* applicability_name(Applicability a) noexcept;

struct ExtremalValue {
  BigInt value;
  std::string regime;
  Applicability applicability;
};

enum class CountMode { weight, coweight };

/// binom(r; k_1, ..., k_s, r - |kappa|). Throws Errc::profile_too_heavy.
BigInt multinomial(int r, const WeightProfile& kappa);

/// Largest number of distinct weight-k columns of rank <= r, for r large.
ExtremalValue ex_formula(int q, int r, int k);

/// Largest number of distinct columns with k zeros of rank <= r, for r large.
/// Throws Errc::unsupported for q = 2, k >= 1.
ExtremalValue coex_formula(int q, int r, int k);

/// Labelled variant. The singleton/zero-sum test only looks at lists that
/// kappa actually uses.
ExtremalValue ex_labeled_formula(const LabelSystem& labels, int r, const WeightProfile& kappa);

/// Affine-rank variant.
ExtremalValue aex_formula(const LabelSystem& labels, int r, const WeightProfile& kappa);

/// Exact maximum for a down-set S at every r: sum over S of binom(r, k') L^k'.
BigInt downset_count(const LabelSystem& labels, int r, const ProfileDownSet& s);

/// sum_{i<=k} binom(r,i)(q-1)^i (weight) or binom(r,i)(q-1)^{r-i} (coweight).
BigInt bound_sums(int q, int r, int k, CountMode mode);

/// Upper bound for (L, kappa) collections of rank <= r: sum over k' <= kappa.
BigInt labeled_bound(const LabelSystem& labels, int r, const WeightProfile& kappa);

/// Number of x in (F_q^x)^n with x·u = beta for any fixed u with nonzero
/// entries; beta is 0 or 1 (every nonzero beta gives the beta = 1 count).
BigInt count_orthogonal_nonzero(int q, int n, int beta);

struct SpacecountResult {
  BigInt value;
  /// a_s = binom(i,s) binom(r-i,k-s) (q-1)^s for s = 0..k.
  std::vector<BigInt> terms;
};

/// Number of vectors with exactly k zeros in v^perp, for any v in GF(q)^r of
/// weight i. Requires 2 <= i <= r and 0 <= k <= r.
SpacecountResult spacecount(int q, int r, int k, int i);

/// Exact comparison spacecount >= (1/q) binom(r,k)(q-1)^{r-k}(1 - 1/(q-1)).
bool spacecount_lower_bound_holds(int q, int r, int k, int i);
/// r >= max{q^{1/2} k^{3/2}, q k}, evaluated in integers.
bool spacecount_bound_regime(int q, int r, int k);

struct HammingParams {
  BigInt length;  // q^r - 1 columns
  BigInt weight;  // (q-1) q^{r-1}
};

HammingParams hamming_params(int q, int r);

/// True when the sequence rises (weakly) then falls (weakly).
bool is_unimodal(const std::vector<BigInt>& seq);

}  // namespace gfx
