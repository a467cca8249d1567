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

#include "formulas.hpp"

#include <string>

#include "error.hpp"

namespace gfx {
namespace {

void require_field_order(int q) {
  if (q > kMaxFieldOrder) fail(Errc::unsupported, "field order " + std::to_string(q) + " exceeds 256");
  if (prime_power_decompose(q).first == 0) fail(Errc::not_prime_power, std::to_string(q) + " is not a prime power");
}

void require_nonneg(int v, const char* name) {
  if (v < 0) fail(Errc::invalid_argument, std::string(name) + " must be nonnegative");
}

void require_fits(const LabelSystem& labels, int r, const WeightProfile& kappa) {
  require_nonneg(r, "r");
  if (kappa.size() != labels.size()) fail(Errc::length_mismatch, "profile length does not match label system");
  if (kappa.norm() > r)
    fail(Errc::profile_too_heavy, "profile norm " + std::to_string(kappa.norm()) + " exceeds r = " + std::to_string(r));
}

bool is_zero_profile(const WeightProfile& kappa) { return kappa.norm() == 0; }

}  // namespace

const char* applicability_name(Applicability a) noexcept {
  return a == Applicability::exact_for_all_r ? "exact-for-all-r" : "proven-for-large-r";
}

BigInt multinomial(int r, const WeightProfile& kappa) {
  require_nonneg(r, "r");
  if (kappa.norm() > r) fail(Errc::profile_too_heavy, "profile norm exceeds r");
  return multinomial(static_cast<std::int64_t>(r), kappa.counts());
}

ExtremalValue ex_formula(int q, int r, int k) {
  require_field_order(q);
  require_nonneg(r, "r");
  require_nonneg(k, "k");
  const bool exact = k == 0 || (q == 2 && k == 2);
  const auto appl = exact ? Applicability::exact_for_all_r : Applicability::proven_for_large_r;
  if (q == 2 && k % 2 == 0) return {binomial(r + 1, k), "ex:q2-even", appl};
  return {binomial(r, k) * ipow(BigInt(q - 1), static_cast<std::uint64_t>(k)), "ex:general", appl};
}

ExtremalValue coex_formula(int q, int r, int k) {
  require_field_order(q);
  require_nonneg(r, "r");
  require_nonneg(k, "k");
  if (q == 2 && k >= 1) fail(Errc::unsupported, "F_q != F_2 required for co-weight k >= 1");
  if (k > r) fail(Errc::invalid_argument, "k must not exceed r");
  BigInt v = binomial(r, k) * ipow(BigInt(q - 1), static_cast<std::uint64_t>(r - k));
  if (k == 0) return {std::move(v), "coex:no-zeros", Applicability::exact_for_all_r};
  return {std::move(v), "coex:general", Applicability::proven_for_large_r};
}

ExtremalValue ex_labeled_formula(const LabelSystem& labels, int r, const WeightProfile& kappa) {
  require_fits(labels, r, kappa);
  const auto appl = is_zero_profile(kappa) ? Applicability::exact_for_all_r : Applicability::proven_for_large_r;
  if (!labels.varies(kappa) && labels.singleton_sum(kappa) == 0)
    return {multinomial(r + 1, kappa), "labeled:singleton-zero-sum", appl};
  return {labels.label_power(kappa) * multinomial(r, kappa), "labeled:general", appl};
}

ExtremalValue aex_formula(const LabelSystem& labels, int r, const WeightProfile& kappa) {
  require_fits(labels, r, kappa);
  const auto appl = is_zero_profile(kappa) ? Applicability::exact_for_all_r : Applicability::proven_for_large_r;
  if (!labels.varies(kappa)) return {multinomial(r, kappa), "aex:singleton", appl};
  return {labels.label_power(kappa) * multinomial(static_cast<std::int64_t>(r) - 1, kappa.counts()), "aex:general",
          appl};
}

BigInt downset_count(const LabelSystem& labels, int r, const ProfileDownSet& s) {
  require_nonneg(r, "r");
  if (!s.empty() && s.width() != labels.size()) fail(Errc::length_mismatch, "down-set width does not match label system");
  BigInt total = 0;
  for (const auto& p : s.profiles()) total += multinomial(static_cast<std::int64_t>(r), p.counts()) * labels.label_power(p);
  return total;
}

BigInt bound_sums(int q, int r, int k, CountMode mode) {
  require_field_order(q);
  require_nonneg(r, "r");
  require_nonneg(k, "k");
  BigInt total = 0;
  const BigInt base = q - 1;
  for (int i = 0; i <= k && i <= r; ++i) {
    const auto exp = static_cast<std::uint64_t>(mode == CountMode::weight ? i : r - i);
    total += binomial(r, i) * ipow(base, exp);
  }
  return total;
}

BigInt labeled_bound(const LabelSystem& labels, int r, const WeightProfile& kappa) {
  require_nonneg(r, "r");
  if (kappa.size() != labels.size()) fail(Errc::length_mismatch, "profile length does not match label system");
  const WeightProfile* seed = &kappa;
  return downset_count(labels, r, downset_closure(std::span(seed, 1)));
}

BigInt count_orthogonal_nonzero(int q, int n, int beta) {
  require_field_order(q);
  require_nonneg(n, "n");
  if (beta != 0 && beta != 1) fail(Errc::invalid_argument, "beta must be 0 or 1");
  const BigInt main = ipow(BigInt(q - 1), static_cast<std::uint64_t>(n));
  const bool n_even = n % 2 == 0;
  BigInt num;
  if (beta == 0)
    num = n_even ? main + (q - 1) : main - (q - 1);
  else
    num = n_even ? main - 1 : main + 1;
  if (num % q != 0) fail(Errc::invalid_argument, "non-integral count (internal error)");
  return num / q;
}

SpacecountResult spacecount(int q, int r, int k, int i) {
  require_field_order(q);
  if (i < 2 || i > r) fail(Errc::invalid_argument, "spacecount requires 2 <= i <= r");
  if (k < 0 || k > r) fail(Errc::invalid_argument, "spacecount requires 0 <= k <= r");
  const BigInt qm1 = q - 1;
  SpacecountResult out;
  out.terms.reserve(static_cast<std::size_t>(k) + 1);
  BigInt sum = binomial(r, k) * ipow(qm1, static_cast<std::uint64_t>(r - k));
  for (int s = 0; s <= k; ++s) {
    const BigInt ways = binomial(i, s) * binomial(r - i, k - s);
    out.terms.push_back(ways * ipow(qm1, static_cast<std::uint64_t>(s)));
    if (ways == 0) continue;
    // Nonzero ways forces k - s <= r - i, so the exponent below is >= 1.
    BigInt term = ways * ipow(qm1, static_cast<std::uint64_t>(r - i - k + s + 1));
    if ((i + s) % 2 == 0)
      sum += term;
    else
      sum -= term;
  }
  if (sum % q != 0) fail(Errc::invalid_argument, "non-integral count (internal error)");
  out.value = sum / q;
  return out;
}

bool spacecount_lower_bound_holds(int q, int r, int k, int i) {
  // q(q-1)·count >= binom(r,k)(q-1)^{r-k}(q-2)
  const BigInt lhs = BigInt(q) * (q - 1) * spacecount(q, r, k, i).value;
  const BigInt rhs = binomial(r, k) * ipow(BigInt(q - 1), static_cast<std::uint64_t>(r - k)) * (q - 2);
  return lhs >= rhs;
}

bool spacecount_bound_regime(int q, int r, int k) {
  // r >= sqrt(q)·k^{3/2}  <=>  r^2 >= q k^3 for r >= 0
  const BigInt r2 = BigInt(r) * r;
  const BigInt qk3 = BigInt(q) * k * k * k;
  return r2 >= qk3 && r >= q * k;
}

HammingParams hamming_params(int q, int r) {
  require_field_order(q);
  if (r < 1) fail(Errc::invalid_argument, "r must be at least 1");
  const BigInt bq = q;
  return {ipow(bq, static_cast<std::uint64_t>(r)) - 1, (q - 1) * ipow(bq, static_cast<std::uint64_t>(r - 1))};
}

bool is_unimodal(const std::vector<BigInt>& seq) {
  std::size_t i = 1;
  while (i < seq.size() && seq[i] >= seq[i - 1]) ++i;
  while (i < seq.size() && seq[i] <= seq[i - 1]) ++i;
  return i >= seq.size();
}

}  // namespace gfx
