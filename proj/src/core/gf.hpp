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
#include <memory>
#include <span>
#include <vector>

namespace gfx {

/// Field element index in [0, q). 0 and 1 are the additive and
/// multiplicative identities. For q = p^e with e > 1 the index is the
/// base-p digit vector of the residue polynomial (lowest degree first).
using Elem = std::uint8_t;

inline constexpr int kMaxFieldOrder = 256;

/// Immutable GF(q) with full lookup tables. Copies share the tables.
class Field {
 public:
  /// Builds GF(q) for a prime power 2 <= q <= 256. Extension fields use the
  /// least monic irreducible polynomial of degree e over GF(p), ordered by
  /// the base-p index of its non-leading coefficients.
  static Field make(int q);

  int order() const noexcept { return tables_->q; }
  int characteristic() const noexcept { return tables_->p; }
  int degree() const noexcept { return tables_->e; }

  /// Coefficients c_0..c_e of the modulus (c_e = 1). {0, 1} for prime fields.
  std::span<const int> modulus() const noexcept { return tables_->modulus; }

  Elem add(Elem a, Elem b) const noexcept { return tables_->add[idx(a, b)]; }
  Elem sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const noexcept { return tables_->mul[idx(a, b)]; }
  Elem neg(Elem a) const noexcept { return tables_->neg[a]; }
  /// Throws Errc::division_by_zero for 0.
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, unsigned exp) const noexcept;

  /// n·1 in the field, i.e. (n mod p) embedded in the prime subfield.
  Elem from_integer(long long n) const noexcept;

  bool contains(unsigned value) const noexcept { return value < static_cast<unsigned>(order()); }

  /// Nonzero elements in ascending index order.
  std::vector<Elem> nonzero_elements() const;

  bool operator==(const Field& other) const noexcept { return order() == other.order(); }

 private:
  struct Tables {
    int q = 0, p = 0, e = 0;
    std::vector<int> modulus;
    std::vector<Elem> add, mul, neg, inv;
  };

  explicit Field(std::shared_ptr<const Tables> t) : tables_(std::move(t)) {}
  std::size_t idx(Elem a, Elem b) const noexcept {
    return static_cast<std::size_t>(a) * static_cast<std::size_t>(tables_->q) + b;
  }

  std::shared_ptr<const Tables> tables_;
};

/// Returns (p, e) when q = p^e with p prime, e >= 1; (0, 0) otherwise.
std::pair<int, int> prime_power_decompose(int q) noexcept;

}  // namespace gfx
