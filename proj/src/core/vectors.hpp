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

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <set>
#include <span>
#include <vector>

#include "bigint.hpp"
#include "gf.hpp"
#include "linalg.hpp"

namespace gfx {

std::size_t weight(std::span<const Elem> v) noexcept;
std::size_t coweight(std::span<const Elem> v) noexcept;

/// Counts (k_1, ..., k_s). Zero coordinates are allowed everywhere.
class WeightProfile {
 public:
  WeightProfile() = default;
  explicit WeightProfile(std::vector<int> counts);

  std::size_t size() const noexcept { return counts_.size(); }
  int operator[](std::size_t i) const noexcept { return counts_[i]; }
  std::span<const int> counts() const noexcept { return counts_; }
  int norm() const noexcept;

  /// Coordinatewise order.
  bool precedes_or_equal(const WeightProfile& o) const noexcept;

  /// The profile with coordinate i lowered by one; nullopt when k_i = 0.
  std::optional<WeightProfile> minus_unit(std::size_t i) const;

  auto operator<=>(const WeightProfile&) const = default;
  bool operator==(const WeightProfile&) const = default;

 private:
  std::vector<int> counts_;
};

/// Pairwise-disjoint nonempty lists of nonzero labels.
class LabelSystem {
 public:
  /// Throws Errc::invalid_argument on a zero label, an empty list, a
  /// repeated label or a label outside the field.
  LabelSystem(Field field, std::vector<std::vector<Elem>> lists);

  /// The single list of all nonzero elements.
  static LabelSystem all_nonzero(const Field& field);

  const Field& field() const noexcept { return field_; }
  std::size_t size() const noexcept { return lists_.size(); }
  const std::vector<Elem>& list(std::size_t i) const { return lists_[i]; }
  const std::vector<std::vector<Elem>>& lists() const noexcept { return lists_; }

  /// Index of the list containing a nonzero element, or nullopt.
  std::optional<std::size_t> list_of(Elem e) const noexcept { return owner_[e] < 0 ? std::nullopt : std::optional<std::size_t>(owner_[e]); }

  bool all_singletons() const noexcept;
  /// True when some list with k_i >= 1 has more than one label.
  bool varies(const WeightProfile& kappa) const;
  /// sum over i of k_i·l_i evaluated in the field (only meaningful for singletons).
  Elem singleton_sum(const WeightProfile& kappa) const;
  /// prod |L_i|^{k_i}
  BigInt label_power(const WeightProfile& kappa) const;

 private:
  Field field_;
  std::vector<std::vector<Elem>> lists_;
  std::vector<int> owner_;
};

/// Profile of v, or nullopt (not an (L, kappa)-vector for any kappa) when
/// some nonzero entry carries no label.
std::optional<WeightProfile> profile_of(std::span<const Elem> v, const LabelSystem& labels);
/// Throws Errc::field_mismatch when v lives over a different field.
std::optional<WeightProfile> profile_of(const Vector& v, const LabelSystem& labels);

/// Visits all (L, kappa)-vectors of length n: supports chosen
/// lexicographically, then labels assigned list by list. Throws
/// Errc::profile_too_heavy when |kappa| > n.
void for_each_profile_vector(std::size_t n, const LabelSystem& labels, const WeightProfile& kappa,
                             const std::function<void(std::span<const Elem>)>& visit);
std::vector<Vector> enumerate_profile_vectors(std::size_t n, const LabelSystem& labels, const WeightProfile& kappa);

/// All vectors of length n with exactly k zeros.
std::vector<Vector> enumerate_coweight_vectors(std::size_t n, const Field& field, std::size_t k);

/// A finite down-closed set of profiles of a common length.
class ProfileDownSet {
 public:
  ProfileDownSet() = default;
  /// Throws Errc::not_a_downset if the set is not down-closed and
  /// Errc::length_mismatch on mixed lengths.
  explicit ProfileDownSet(std::set<WeightProfile> profiles);

  const std::set<WeightProfile>& profiles() const noexcept { return profiles_; }
  bool contains(const WeightProfile& p) const { return profiles_.contains(p); }
  bool empty() const noexcept { return profiles_.empty(); }
  std::size_t size() const noexcept { return profiles_.size(); }
  /// Length s of every member; 0 for the empty set.
  std::size_t width() const noexcept { return profiles_.empty() ? 0 : profiles_.begin()->size(); }
  /// Largest norm of any member.
  int max_norm() const noexcept;

 private:
  std::set<WeightProfile> profiles_;
};

/// Smallest down-set containing the input.
ProfileDownSet downset_closure(std::span<const WeightProfile> profiles);
bool is_downset(const std::set<WeightProfile>& profiles);

}  // namespace gfx
