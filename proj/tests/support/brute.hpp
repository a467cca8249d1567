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

// Slow reference implementations for tests. Nothing here uses the library.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

namespace brute {

// GF(p^e) by polynomial arithmetic over GF(p); element index = base-p digits,
// lowest degree first. The modulus is the least monic irreducible polynomial
// ordered by the base-p index of its lower coefficients.
class Field {
 public:
  explicit Field(int q) : q_(q) {
    for (int p = 2; p <= q; ++p) {
      if (q % p) continue;
      p_ = p;
      break;
    }
    int t = q;
    e_ = 0;
    while (t % p_ == 0) {
      t /= p_;
      ++e_;
    }
    if (t != 1) throw std::invalid_argument("not a prime power");
    if (e_ > 1) find_modulus();
  }

  int q() const { return q_; }
  int p() const { return p_; }
  const std::vector<int>& modulus() const { return mod_; }

  int add(int a, int b) const {
    const auto x = digits(a), y = digits(b);
    std::vector<int> z(static_cast<std::size_t>(e_));
    for (int i = 0; i < e_; ++i) z[i] = (x[i] + y[i]) % p_;
    return index(z);
  }
  int neg(int a) const {
    auto x = digits(a);
    for (auto& d : x) d = (p_ - d) % p_;
    return index(x);
  }
  int sub(int a, int b) const { return add(a, neg(b)); }
  int mul(int a, int b) const {
    const auto x = digits(a), y = digits(b);
    std::vector<int> prod(static_cast<std::size_t>(2 * e_), 0);
    for (int i = 0; i < e_; ++i)
      for (int j = 0; j < e_; ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % p_;
    reduce(prod);
    prod.resize(static_cast<std::size_t>(e_));
    return index(prod);
  }
  int inv(int a) const {
    for (int b = 1; b < q_; ++b)
      if (mul(a, b) == 1) return b;
    throw std::domain_error("zero has no inverse");
  }

 private:
  std::vector<int> digits(int a) const {
    std::vector<int> d(static_cast<std::size_t>(e_));
    for (int i = 0; i < e_; ++i) {
      d[i] = a % p_;
      a /= p_;
    }
    return d;
  }
  int index(const std::vector<int>& d) const {
    int v = 0;
    for (int i = e_; i-- > 0;) v = v * p_ + d[i];
    return v;
  }
  // prod has degree < 2e; reduce modulo the monic modulus of degree e.
  void reduce(std::vector<int>& prod) const {
    for (int deg = static_cast<int>(prod.size()) - 1; deg >= e_; --deg) {
      const int c = prod[deg];
      if (!c) continue;
      for (int i = 0; i <= e_; ++i) prod[deg - e_ + i] = ((prod[deg - e_ + i] - c * mod_[i]) % p_ + p_) % p_;
    }
  }
  static bool divides(const std::vector<int>& d, std::vector<int> f, int p) {
    // d monic; f arbitrary; remainder of f mod d over GF(p)
    const int dd = static_cast<int>(d.size()) - 1;
    for (int deg = static_cast<int>(f.size()) - 1; deg >= dd; --deg) {
      const int c = f[deg];
      if (!c) continue;
      for (int i = 0; i <= dd; ++i) f[deg - dd + i] = ((f[deg - dd + i] - c * d[i]) % p + p) % p;
    }
    for (int i = 0; i < dd; ++i)
      if (f[i]) return false;
    return true;
  }
  void find_modulus() {
    int count = 1;
    for (int i = 0; i < e_; ++i) count *= p_;
    for (int low = 0; low < count; ++low) {
      std::vector<int> f(static_cast<std::size_t>(e_) + 1);
      int t = low;
      for (int i = 0; i < e_; ++i) {
        f[i] = t % p_;
        t /= p_;
      }
      f[e_] = 1;
      bool irreducible = true;
      for (int dd = 1; dd <= e_ / 2 && irreducible; ++dd) {
        int dcount = 1;
        for (int i = 0; i < dd; ++i) dcount *= p_;
        for (int dl = 0; dl < dcount && irreducible; ++dl) {
          std::vector<int> d(static_cast<std::size_t>(dd) + 1);
          int s = dl;
          for (int i = 0; i < dd; ++i) {
            d[i] = s % p_;
            s /= p_;
          }
          d[dd] = 1;
          if (divides(d, f, p_)) irreducible = false;
        }
      }
      if (irreducible) {
        mod_ = f;
        return;
      }
    }
    throw std::logic_error("no irreducible polynomial");
  }

  int q_, p_ = 0, e_ = 1;
  std::vector<int> mod_;
};

using Vec = std::vector<int>;

// All words of length n over {0..q-1}, first coordinate most significant.
inline std::vector<Vec> all_vectors(int q, int n) {
  std::vector<Vec> out;
  Vec v(static_cast<std::size_t>(n), 0);
  while (true) {
    out.push_back(v);
    int j = n - 1;
    while (j >= 0 && v[j] == q - 1) v[j--] = 0;
    if (j < 0) break;
    ++v[j];
  }
  return out;
}

inline std::size_t weight(const Vec& v) {
  return static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [](int x) { return x != 0; }));
}

inline int dot(const Field& f, const Vec& a, const Vec& b) {
  int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s = f.add(s, f.mul(a[i], b[i]));
  return s;
}

// Closure of a vector set under addition and scaling.
inline std::set<Vec> span(const Field& f, const std::vector<Vec>& gens, std::size_t n) {
  std::set<Vec> s{Vec(n, 0)};
  for (const auto& g : gens) {
    std::set<Vec> next;
    for (const auto& w : s)
      for (int c = 0; c < f.q(); ++c) {
        Vec x = w;
        for (std::size_t i = 0; i < n; ++i) x[i] = f.add(x[i], f.mul(c, g[i]));
        next.insert(x);
      }
    s = std::move(next);
  }
  return s;
}

// Rank from the size of the span: |span| = q^rank.
inline std::size_t rank_of(const Field& f, const std::vector<Vec>& vecs, std::size_t n) {
  std::size_t size = span(f, vecs, n).size(), r = 0;
  while (size > 1) {
    size /= static_cast<std::size_t>(f.q());
    ++r;
  }
  return r;
}

// Every r-dimensional subspace of GF(q)^n as its member set, grown one
// vector at a time and deduplicated.
inline std::vector<std::set<Vec>> subspaces(const Field& f, std::size_t n, std::size_t r) {
  std::set<std::set<Vec>> level{{Vec(n, 0)}};
  const auto every = all_vectors(f.q(), static_cast<int>(n));
  for (std::size_t d = 0; d < r; ++d) {
    std::set<std::set<Vec>> next;
    for (const auto& w : level)
      for (const auto& v : every) {
        if (w.count(v)) continue;
        std::set<Vec> grown;
        for (const auto& x : w)
          for (int c = 0; c < f.q(); ++c) {
            Vec y = x;
            for (std::size_t i = 0; i < n; ++i) y[i] = f.add(y[i], f.mul(c, v[i]));
            grown.insert(std::move(y));
          }
        next.insert(std::move(grown));
      }
    level = std::move(next);
  }
  return {level.begin(), level.end()};
}

// Max over n in n_list and r-dim subspaces of #members satisfying `keep`.
// In affine mode the ambient space is GF(q)^{1+n} and members must start with 1.
struct ScanResult {
  std::size_t max_count = 0;
  std::map<std::size_t, std::size_t> per_n;
};

inline ScanResult scan(const Field& f, std::size_t r, const std::vector<std::size_t>& n_list,
                       const std::function<bool(const Vec&)>& keep, bool affine = false) {
  ScanResult out;
  for (std::size_t n : n_list) {
    const std::size_t big = affine ? n + 1 : n;
    std::size_t best = 0;
    if (big >= r) {
      for (const auto& w : subspaces(f, big, r)) {
        std::size_t c = 0;
        for (const auto& x : w) {
          if (affine) {
            if (x[0] != 1) continue;
            if (keep(Vec(x.begin() + 1, x.end()))) ++c;
          } else if (keep(x)) {
            ++c;
          }
        }
        best = std::max(best, c);
      }
    }
    out.per_n[n] = best;
    out.max_count = std::max(out.max_count, best);
  }
  return out;
}

// Number of (L, kappa) label profile counts of x, or empty if some entry is unlabeled.
inline std::vector<int> profile(const Vec& x, const std::vector<std::vector<int>>& lists) {
  std::vector<int> c(lists.size(), 0);
  for (int e : x) {
    if (!e) continue;
    bool found = false;
    for (std::size_t i = 0; i < lists.size(); ++i)
      if (std::find(lists[i].begin(), lists[i].end(), e) != lists[i].end()) {
        ++c[i];
        found = true;
      }
    if (!found) return {};
  }
  return c;
}

inline long long binom(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace brute
