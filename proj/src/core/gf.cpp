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

#include "gf.hpp"

#include <array>
#include <mutex>
#include <string>

#include "error.hpp"

namespace gfx {
namespace {

using Poly = std::vector<int>;  // coefficients over GF(p), lowest degree first

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

// Remainder of a modulo monic b over GF(p).
Poly poly_mod(Poly a, const Poly& b, int p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  while (a.size() >= b.size()) {
    const int lead = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) {
      a[shift + i] = ((a[shift + i] - lead * b[i]) % p + p) % p;
    }
    trim(a);
  }
  return a;
}

// Monic polynomial of degree d whose lower coefficients are the base-p digits of index.
Poly monic_from_index(int index, int d, int p) {
  Poly f(static_cast<std::size_t>(d) + 1, 0);
  for (int i = 0; i < d; ++i) {
    f[i] = index % p;
    index /= p;
  }
  f[d] = 1;
  return f;
}

int ipow_int(int base, int exp) {
  int r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

bool is_irreducible(const Poly& f, int p) {
  const int e = static_cast<int>(f.size()) - 1;
  for (int d = 1; 2 * d <= e; ++d) {
    const int count = ipow_int(p, d);
    for (int idx = 0; idx < count; ++idx) {
      if (poly_mod(f, monic_from_index(idx, d, p), p).empty()) return false;
    }
  }
  return true;
}

Poly least_irreducible(int p, int e) {
  if (e == 1) return {0, 1};
  const int count = ipow_int(p, e);
  for (int idx = 0; idx < count; ++idx) {
    Poly f = monic_from_index(idx, e, p);
    if (f[0] != 0 && is_irreducible(f, p)) return f;
  }
  fail(Errc::unsupported, "no irreducible polynomial found");  // unreachable for valid (p, e)
}

Poly digits(int value, int p, int e) {
  Poly d(static_cast<std::size_t>(e), 0);
  for (int i = 0; i < e; ++i) {
    d[i] = value % p;
    value /= p;
  }
  return d;
}

int from_digits(const Poly& d, int p) {
  int v = 0;
  for (std::size_t i = d.size(); i-- > 0;) v = v * p + d[i];
  return v;
}

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

std::pair<int, int> prime_power_decompose(int q) noexcept {
  if (q < 2) return {0, 0};
  int p = 2;
  while (q % p != 0) ++p;
  if (!is_prime(p)) return {0, 0};
  int e = 0;
  while (q % p == 0) {
    q /= p;
    ++e;
  }
  if (q != 1) return {0, 0};
  return {p, e};
}

Field Field::make(int q) {
  if (q > kMaxFieldOrder) fail(Errc::unsupported, "field order " + std::to_string(q) + " exceeds 256");
  const auto [p, e] = prime_power_decompose(q);
  if (p == 0) fail(Errc::not_prime_power, std::to_string(q) + " is not a prime power");

  static std::mutex cache_mutex;
  static std::array<std::shared_ptr<const Tables>, kMaxFieldOrder + 1> cache;
  std::lock_guard lock(cache_mutex);
  if (cache[q]) return Field(cache[q]);

  auto t = std::make_shared<Tables>();
  t->q = q;
  t->p = p;
  t->e = e;
  t->modulus = least_irreducible(p, e);
  const auto n = static_cast<std::size_t>(q);
  t->add.resize(n * n);
  t->mul.resize(n * n);
  t->neg.resize(n);
  t->inv.assign(n, 0);

  std::vector<Poly> dig(n);
  for (int a = 0; a < q; ++a) dig[a] = digits(a, p, e);

  for (int a = 0; a < q; ++a) {
    for (int b = 0; b < q; ++b) {
      Poly s(static_cast<std::size_t>(e));
      for (int i = 0; i < e; ++i) s[i] = (dig[a][i] + dig[b][i]) % p;
      t->add[a * n + b] = static_cast<Elem>(from_digits(s, p));

      Poly prod(static_cast<std::size_t>(2 * e), 0);
      for (int i = 0; i < e; ++i)
        for (int j = 0; j < e; ++j) prod[i + j] = (prod[i + j] + dig[a][i] * dig[b][j]) % p;
      Poly r = poly_mod(prod, t->modulus, p);
      r.resize(static_cast<std::size_t>(e), 0);
      t->mul[a * n + b] = static_cast<Elem>(from_digits(r, p));
    }
  }
  for (int a = 0; a < q; ++a) {
    for (int b = 0; b < q; ++b) {
      if (t->add[a * n + b] == 0) t->neg[a] = static_cast<Elem>(b);
      if (t->mul[a * n + b] == 1) t->inv[a] = static_cast<Elem>(b);
    }
  }
  cache[q] = t;
  return Field(std::move(t));
}

Elem Field::inv(Elem a) const {
  if (a == 0) fail(Errc::division_by_zero, "inverse of 0");
  return tables_->inv[a];
}

Elem Field::pow(Elem a, unsigned exp) const noexcept {
  Elem r = 1;
  Elem b = a;
  while (exp != 0) {
    if (exp & 1u) r = mul(r, b);
    b = mul(b, b);
    exp >>= 1;
  }
  return r;
}

Elem Field::from_integer(long long n) const noexcept {
  const int p = characteristic();
  long long m = n % p;
  if (m < 0) m += p;
  // Prime subfield elements are the indices 0..p-1 in both representations.
  return static_cast<Elem>(m);
}

std::vector<Elem> Field::nonzero_elements() const {
  std::vector<Elem> out;
  out.reserve(static_cast<std::size_t>(order() - 1));
  for (int a = 1; a < order(); ++a) out.push_back(static_cast<Elem>(a));
  return out;
}

}  // namespace gfx
