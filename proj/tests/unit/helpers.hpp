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

#include <random>
#include <vector>

#include "doctest.h"
#include "error.hpp"
#include "linalg.hpp"

namespace gfx::test {

inline Matrix mat(int q, const std::vector<std::vector<Elem>>& rows) {
  return Matrix::from_rows(Field::make(q), rows, rows.empty() ? 0 : rows[0].size());
}

inline Matrix random_matrix(std::mt19937_64& rng, const Field& f, std::size_t rows, std::size_t cols) {
  std::uniform_int_distribution<int> d(0, f.order() - 1);
  std::vector<Elem> data(rows * cols);
  for (auto& e : data) e = static_cast<Elem>(d(rng));
  return Matrix(f, rows, cols, std::move(data));
}

template <typename F>
Errc error_code(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected gfx::Error");
  return Errc::invalid_argument;
}

}  // namespace gfx::test
