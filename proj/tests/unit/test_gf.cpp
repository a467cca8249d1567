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

#include "brute.hpp"
#include "helpers.hpp"

using namespace gfx;
using gfx::test::error_code;

TEST_CASE("GF(2) is XOR and AND") {
  const Field f = Field::make(2);
  for (Elem a = 0; a < 2; ++a)
    for (Elem b = 0; b < 2; ++b) {
      CHECK(f.add(a, b) == (a ^ b));
      CHECK(f.mul(a, b) == (a & b));
    }
}

TEST_CASE("spec examples") {
  CHECK(Field::make(5).add(3, 4) == 2);
  CHECK(Field::make(3).inv(2) == 2);
  const Field f4 = Field::make(4);
  for (Elem x = 0; x < 4; ++x) CHECK(f4.add(x, x) == 0);
  // generator g = x has index p = 2; x^2 = x + 1 under x^2 + x + 1
  CHECK(f4.mul(2, 2) == 3);
  CHECK(Field::make(2).nonzero_elements() == std::vector<Elem>{1});
  CHECK(Field::make(3).nonzero_elements() == std::vector<Elem>{1, 2});
  CHECK(f4.nonzero_elements().size() == 3);
}

TEST_CASE("orders and characteristic") {
  for (auto [q, p, e] : std::vector<std::tuple<int, int, int>>{{2, 2, 1}, {9, 3, 2}, {16, 2, 4}, {125, 5, 3}, {256, 2, 8}}) {
    const Field f = Field::make(q);
    CHECK(f.order() == q);
    CHECK(f.characteristic() == p);
    CHECK(f.degree() == e);
  }
}

TEST_CASE("moduli are the least monic irreducibles") {
  auto mod = [](int q) {
    auto m = Field::make(q).modulus();
    return std::vector<int>(m.begin(), m.end());
  };
  CHECK(mod(4) == std::vector<int>{1, 1, 1});
  CHECK(mod(8) == std::vector<int>{1, 1, 0, 1});
  CHECK(mod(9) == std::vector<int>{1, 0, 1});
  CHECK(mod(16) == std::vector<int>{1, 1, 0, 0, 1});
}

TEST_CASE("errors") {
  CHECK(error_code([] { Field::make(6); }) == Errc::not_prime_power);
  CHECK(error_code([] { Field::make(1); }) == Errc::not_prime_power);
  CHECK(error_code([] { Field::make(0); }) == Errc::not_prime_power);
  CHECK(error_code([] { Field::make(512); }) == Errc::unsupported);
  CHECK(error_code([] { Field::make(3).inv(0); }) == Errc::division_by_zero);
}

TEST_CASE("deterministic construction") {
  for (int q : {8, 27, 49}) {
    const Field a = Field::make(q), b = Field::make(q);
    for (int x = 0; x < q; ++x)
      for (int y = 0; y < q; ++y) {
        CHECK(a.mul(static_cast<Elem>(x), static_cast<Elem>(y)) == b.mul(static_cast<Elem>(x), static_cast<Elem>(y)));
        CHECK(a.add(static_cast<Elem>(x), static_cast<Elem>(y)) == b.add(static_cast<Elem>(x), static_cast<Elem>(y)));
      }
  }
}

TEST_CASE("tables agree with polynomial arithmetic") {
  for (int q : {2, 3, 4, 5, 7, 8, 9, 16, 25, 27, 32, 49, 64, 81}) {
    CAPTURE(q);
    const Field f = Field::make(q);
    const brute::Field g(q);
    bool ok = true;
    for (int a = 0; a < q && ok; ++a)
      for (int b = 0; b < q && ok; ++b)
        ok = f.add(static_cast<Elem>(a), static_cast<Elem>(b)) == g.add(a, b) &&
             f.mul(static_cast<Elem>(a), static_cast<Elem>(b)) == g.mul(a, b);
    CHECK(ok);
  }
}

TEST_CASE("pow, div, from_integer") {
  const Field f = Field::make(7);
  CHECK(f.pow(3, 6) == 1);
  CHECK(f.pow(0, 0) == 1);
  CHECK(f.div(6, 3) == 2);
  CHECK(f.from_integer(-1) == 6);
  CHECK(f.from_integer(15) == 1);
  const Field f9 = Field::make(9);
  for (Elem a = 1; a < 9; ++a) CHECK(f9.pow(a, 8) == 1);  // Lagrange
  CHECK(f9.from_integer(4) == 1);  // integers map into the prime subfield
}

TEST_CASE("property: multiplicative group is cyclic of order q-1") {
  for (int q : {4, 8, 9, 16, 25, 27, 256}) {
    const Field f = Field::make(q);
    bool found = false;
    for (Elem g = 1; g < q && !found; ++g) {
      Elem x = 1;
      int order = 0;
      do {
        x = f.mul(x, g);
        ++order;
      } while (x != 1);
      found = order == q - 1;
    }
    CHECK_MESSAGE(found, "q = " << q);
  }
}
