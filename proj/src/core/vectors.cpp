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

#include "vectors.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "error.hpp"

namespace gfx {

std::size_t weight(std::span<const Elem> v) noexcept {
  return static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [](Elem e) { return e != 0; }));
}

std::size_t coweight(std::span<const Elem> v) noexcept { return v.size() - weight(v); }

WeightProfile::WeightProfile(std::vector<int> counts) : counts_(std::move(counts)) {
  for (int c : counts_)
    if (c < 0) fail(Errc::invalid_argument, "negative weight-profile coordinate");
}

int WeightProfile::norm() const noexcept { return std::accumulate(counts_.begin(), counts_.end(), 0); }

bool WeightProfile::precedes_or_equal(const WeightProfile& o) const noexcept {
  if (o.size() != size()) return false;
  for (std::size_t i = 0; i < size(); ++i)
    if (counts_[i] > o.counts_[i]) return false;
  return true;
}

std::optional<WeightProfile> WeightProfile::minus_unit(std::size_t i) const {
  if (i >= size()) fail(Errc::index_out_of_range, "profile coordinate out of range");
  if (counts_[i] == 0) return std::nullopt;
  auto c = counts_;
  --c[i];
  return WeightProfile(std::move(c));
}

LabelSystem::LabelSystem(Field field, std::vector<std::vector<Elem>> lists)
    : field_(std::move(field)), lists_(std::move(lists)), owner_(static_cast<std::size_t>(field_.order()), -1) {
  for (std::size_t i = 0; i < lists_.size(); ++i) {
    if (lists_[i].empty()) fail(Errc::invalid_argument, "label list " + std::to_string(i) + " is empty");
    for (Elem e : lists_[i]) {
      if (!field_.contains(e)) fail(Errc::invalid_argument, "label " + std::to_string(e) + " not in field");
      if (e == 0) fail(Errc::invalid_argument, "0 cannot be a label");
      if (owner_[e] >= 0) fail(Errc::invalid_argument, "label " + std::to_string(e) + " appears twice");
      owner_[e] = static_cast<int>(i);
    }
    std::sort(lists_[i].begin(), lists_[i].end());
  }
}

LabelSystem LabelSystem::all_nonzero(const Field& field) { return LabelSystem(field, {field.nonzero_elements()}); }

bool LabelSystem::all_singletons() const noexcept {
  return std::all_of(lists_.begin(), lists_.end(), [](const auto& l) { return l.size() == 1; });
}

bool LabelSystem::varies(const WeightProfile& kappa) const {
  if (kappa.size() != size()) fail(Errc::length_mismatch, "profile length does not match label system");
  for (std::size_t i = 0; i < size(); ++i)
    if (kappa[i] > 0 && lists_[i].size() > 1) return true;
  return false;
}

Elem LabelSystem::singleton_sum(const WeightProfile& kappa) const {
  if (kappa.size() != size()) fail(Errc::length_mismatch, "profile length does not match label system");
  Elem s = 0;
  for (std::size_t i = 0; i < size(); ++i) s = field_.add(s, field_.mul(field_.from_integer(kappa[i]), lists_[i][0]));
  return s;
}

BigInt LabelSystem::label_power(const WeightProfile& kappa) const {
  if (kappa.size() != size()) fail(Errc::length_mismatch, "profile length does not match label system");
  BigInt r = 1;
  for (std::size_t i = 0; i < size(); ++i) r *= ipow(BigInt(lists_[i].size()), static_cast<std::uint64_t>(kappa[i]));
  return r;
}

std::optional<WeightProfile> profile_of(std::span<const Elem> v, const LabelSystem& labels) {
  std::vector<int> counts(labels.size(), 0);
  for (Elem e : v) {
    if (e == 0) continue;
    if (!labels.field().contains(e)) return std::nullopt;
    auto idx = labels.list_of(e);
    if (!idx) return std::nullopt;
    ++counts[*idx];
  }
  return WeightProfile(std::move(counts));
}

std::optional<WeightProfile> profile_of(const Vector& v, const LabelSystem& labels) {
  if (!(v.field() == labels.field())) fail(Errc::field_mismatch, "vector and label system use different fields");
  return profile_of(v.entries(), labels);
}

namespace {

// Recursive helper for the (L, kappa) enumerator.
struct ProfileWalker {
  std::size_t n;
  const LabelSystem& labels;
  const WeightProfile& kappa;
  const std::function<void(std::span<const Elem>)>& visit;
  std::vector<Elem> buf;
  std::vector<int> list_at;  // list index per support position, -1 outside support

  void assign_labels(std::size_t pos) {
    while (pos < n && list_at[pos] < 0) ++pos;
    if (pos == n) {
      visit(buf);
      return;
    }
    for (Elem l : labels.list(static_cast<std::size_t>(list_at[pos]))) {
      buf[pos] = l;
      assign_labels(pos + 1);
    }
    buf[pos] = 0;
  }

  // Chooses positions for list i among the support positions not yet taken.
  void choose_lists(std::size_t i, const std::vector<std::size_t>& open) {
    if (i == labels.size()) {
      assign_labels(0);
      return;
    }
    const auto k = static_cast<std::size_t>(kappa[i]);
    for (const auto& pick : pivot_sets(open.size(), k)) {
      std::vector<std::size_t> rest;
      std::size_t t = 0;
      for (std::size_t j = 0; j < open.size(); ++j) {
        if (t < pick.size() && pick[t] == j) {
          list_at[open[j]] = static_cast<int>(i);
          ++t;
        } else {
          rest.push_back(open[j]);
        }
      }
      choose_lists(i + 1, rest);
      for (std::size_t p : pick) list_at[open[p]] = -1;
    }
  }
};

}  // namespace

void for_each_profile_vector(std::size_t n, const LabelSystem& labels, const WeightProfile& kappa,
                             const std::function<void(std::span<const Elem>)>& visit) {
  if (kappa.size() != labels.size()) fail(Errc::length_mismatch, "profile length does not match label system");
  const auto norm = static_cast<std::size_t>(kappa.norm());
  if (norm > n) fail(Errc::profile_too_heavy, "profile norm " + std::to_string(norm) + " exceeds length " + std::to_string(n));
  ProfileWalker w{n, labels, kappa, visit, std::vector<Elem>(n, 0), std::vector<int>(n, -1)};
  for (const auto& support : pivot_sets(n, norm)) w.choose_lists(0, support);
}

std::vector<Vector> enumerate_profile_vectors(std::size_t n, const LabelSystem& labels, const WeightProfile& kappa) {
  std::vector<Vector> out;
  for_each_profile_vector(n, labels, kappa, [&](std::span<const Elem> v) {
    out.emplace_back(labels.field(), std::vector<Elem>(v.begin(), v.end()));
  });
  return out;
}

std::vector<Vector> enumerate_coweight_vectors(std::size_t n, const Field& field, std::size_t k) {
  if (k > n) fail(Errc::profile_too_heavy, "co-weight exceeds length");
  return enumerate_profile_vectors(n, LabelSystem::all_nonzero(field), WeightProfile({static_cast<int>(n - k)}));
}

ProfileDownSet::ProfileDownSet(std::set<WeightProfile> profiles) : profiles_(std::move(profiles)) {
  for (const auto& p : profiles_)
    if (p.size() != width()) fail(Errc::length_mismatch, "profiles of different lengths");
  if (!is_downset(profiles_)) fail(Errc::not_a_downset, "profile set is not closed downward");
}

int ProfileDownSet::max_norm() const noexcept {
  int m = 0;
  for (const auto& p : profiles_) m = std::max(m, p.norm());
  return m;
}

bool is_downset(const std::set<WeightProfile>& profiles) {
  for (const auto& p : profiles)
    for (std::size_t i = 0; i < p.size(); ++i)
      if (auto lower = p.minus_unit(i); lower && !profiles.contains(*lower)) return false;
  return true;
}

ProfileDownSet downset_closure(std::span<const WeightProfile> profiles) {
  std::set<WeightProfile> out;
  std::vector<WeightProfile> stack(profiles.begin(), profiles.end());
  const std::size_t s = profiles.empty() ? 0 : profiles.front().size();
  for (const auto& p : profiles)
    if (p.size() != s) fail(Errc::length_mismatch, "profiles of different lengths");
  while (!stack.empty()) {
    WeightProfile p = std::move(stack.back());
    stack.pop_back();
    if (!out.insert(p).second) continue;
    for (std::size_t i = 0; i < p.size(); ++i)
      if (auto lower = p.minus_unit(i)) stack.push_back(std::move(*lower));
  }
  return ProfileDownSet(std::move(out));
}

}  // namespace gfx
