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

#include "linalg.hpp"

#include <algorithm>
#include <string>

#include "error.hpp"

namespace gfx {

Vector::Vector(Field field, std::vector<Elem> entries) : field_(std::move(field)), entries_(std::move(entries)) {
  for (Elem e : entries_)
    if (!field_.contains(e)) fail(Errc::invalid_argument, "vector entry out of field range");
}

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols, std::vector<Elem> entries)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows_ * cols_) fail(Errc::length_mismatch, "matrix entry count does not match shape");
  for (Elem e : data_)
    if (!field_.contains(e)) fail(Errc::invalid_argument, "matrix entry out of field range");
}

Matrix Matrix::from_rows(Field field, const std::vector<std::vector<Elem>>& rows, std::size_t cols) {
  if (!rows.empty()) cols = rows.front().size();
  std::vector<Elem> data;
  data.reserve(rows.size() * cols);
  for (const auto& r : rows) {
    if (r.size() != cols) fail(Errc::length_mismatch, "ragged matrix rows");
    data.insert(data.end(), r.begin(), r.end());
  }
  return Matrix(std::move(field), rows.size(), cols, std::move(data));
}

Matrix Matrix::from_columns(Field field, std::size_t rows, std::span<const std::vector<Elem>> columns) {
  Matrix m(std::move(field), rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows) fail(Errc::length_mismatch, "column length does not match row count");
    for (std::size_t i = 0; i < rows; ++i) {
      if (!m.field_.contains(columns[j][i])) fail(Errc::invalid_argument, "matrix entry out of field range");
      m(i, j) = columns[j][i];
    }
  }
  return m;
}

std::vector<Elem> Matrix::column(std::size_t j) const {
  std::vector<Elem> c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

std::vector<std::vector<Elem>> Matrix::columns() const {
  std::vector<std::vector<Elem>> out;
  out.reserve(cols_);
  for (std::size_t j = 0; j < cols_; ++j) out.push_back(column(j));
  return out;
}

RrefResult rref(const Matrix& m) {
  const Field& f = m.field();
  Matrix a = m;
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t col = 0; col < a.cols() && lead < a.rows(); ++col) {
    std::size_t sel = lead;
    while (sel < a.rows() && a(sel, col) == 0) ++sel;
    if (sel == a.rows()) continue;
    if (sel != lead) std::swap_ranges(a.row(sel).begin(), a.row(sel).end(), a.row(lead).begin());
    const Elem scale = f.inv(a(lead, col));
    for (Elem& x : a.row(lead)) x = f.mul(x, scale);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == lead || a(i, col) == 0) continue;
      const Elem factor = f.neg(a(i, col));
      auto src = a.row(lead);
      auto dst = a.row(i);
      for (std::size_t j = col; j < a.cols(); ++j) dst[j] = f.add(dst[j], f.mul(factor, src[j]));
    }
    pivots.push_back(col);
    ++lead;
  }
  const std::size_t r = pivots.size();
  return RrefResult{std::move(a), r, std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

Matrix append_row(const Matrix& m, std::span<const Elem> row) {
  if (row.size() != m.cols()) fail(Errc::length_mismatch, "appended row has wrong length");
  std::vector<Elem> data(m.data().begin(), m.data().end());
  data.insert(data.end(), row.begin(), row.end());
  return Matrix(m.field(), m.rows() + 1, m.cols(), std::move(data));
}

Matrix append_constant_row(const Matrix& m, Elem value) {
  const std::vector<Elem> row(m.cols(), value);
  return append_row(m, row);
}

Matrix delete_row(const Matrix& m, std::size_t index) {
  if (index >= m.rows())
    fail(Errc::index_out_of_range, "row " + std::to_string(index) + " of " + std::to_string(m.rows()));
  std::vector<Elem> data;
  data.reserve((m.rows() - 1) * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i == index) continue;
    auto r = m.row(i);
    data.insert(data.end(), r.begin(), r.end());
  }
  return Matrix(m.field(), m.rows() - 1, m.cols(), std::move(data));
}

std::size_t a_rank(const Matrix& m) { return rank(append_constant_row(m, 1)); }

Subspace Subspace::row_space(const Matrix& generators) {
  RrefResult r = rref(generators);
  std::vector<Elem> data(r.reduced.data().begin(), r.reduced.data().begin() + r.rank * generators.cols());
  return Subspace(Matrix(generators.field(), r.rank, generators.cols(), std::move(data)), std::move(r.pivots));
}

Subspace Subspace::column_space(const Matrix& m) {
  Matrix t(m.field(), m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) t(j, i) = m(i, j);
  return row_space(t);
}

Subspace Subspace::from_canonical(Matrix basis, std::vector<std::size_t> pivots) {
  return Subspace(std::move(basis), std::move(pivots));
}

bool Subspace::contains(std::span<const Elem> v) const {
  if (v.size() != ambient_dim()) fail(Errc::length_mismatch, "vector length does not match ambient dimension");
  const Field& f = field();
  std::vector<Elem> rem(v.begin(), v.end());
  for (std::size_t i = 0; i < dim(); ++i) {
    const Elem c = rem[pivots_[i]];
    if (c == 0) continue;
    const Elem factor = f.neg(c);
    auto b = basis_.row(i);
    for (std::size_t j = 0; j < rem.size(); ++j) rem[j] = f.add(rem[j], f.mul(factor, b[j]));
  }
  return std::all_of(rem.begin(), rem.end(), [](Elem e) { return e == 0; });
}

BigInt gaussian_binomial(int q, std::size_t n, std::size_t r) {
  if (r > n) return 0;
  BigInt num = 1, den = 1;
  const BigInt bq = q;
  for (std::size_t i = 0; i < r; ++i) {
    num *= ipow(bq, n - i) - 1;
    den *= ipow(bq, r - i) - 1;
  }
  return num / den;
}

std::vector<std::vector<std::size_t>> pivot_sets(std::size_t n, std::size_t r) {
  std::vector<std::vector<std::size_t>> out;
  if (r > n) return out;
  std::vector<std::size_t> cur(r);
  for (std::size_t i = 0; i < r; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    std::size_t i = r;
    while (i > 0 && cur[i - 1] == n - r + (i - 1)) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < r; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> free_positions(std::size_t n, std::span<const std::size_t> pivots) {
  std::vector<bool> is_pivot(n, false);
  for (std::size_t p : pivots) is_pivot[p] = true;
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < pivots.size(); ++i)
    for (std::size_t j = pivots[i] + 1; j < n; ++j)
      if (!is_pivot[j]) out.emplace_back(i, j);
  return out;
}

void for_each_subspace_with_pivots(const Field& field, std::size_t n, std::span<const std::size_t> pivots,
                                   const std::function<void(const Subspace&)>& visit) {
  const std::size_t r = pivots.size();
  const auto frees = free_positions(n, pivots);
  const int q = field.order();
  Matrix basis(field, r, n);
  for (std::size_t i = 0; i < r; ++i) basis(i, pivots[i]) = 1;
  const std::vector<std::size_t> piv(pivots.begin(), pivots.end());
  std::vector<int> counter(frees.size(), 0);
  while (true) {
    visit(Subspace::from_canonical(basis, piv));
    // Increment the base-q counter; last free entry is least significant.
    std::size_t k = frees.size();
    while (k > 0) {
      --k;
      auto [i, j] = frees[k];
      if (++counter[k] < q) {
        basis(i, j) = static_cast<Elem>(counter[k]);
        break;
      }
      counter[k] = 0;
      basis(i, j) = 0;
      if (k == 0) return;
    }
    if (frees.empty()) return;
  }
}

void for_each_subspace(const Field& field, std::size_t n, std::size_t r, const Budget& budget,
                       const std::function<void(const Subspace&)>& visit) {
  if (r > n) fail(Errc::invalid_argument, "subspace dimension exceeds ambient dimension");
  const BigInt total = gaussian_binomial(field.order(), n, r);
  if (total > budget.subspaces)
    fail(Errc::budget_exceeded, "[" + std::to_string(n) + " choose " + std::to_string(r) + "]_" +
                                    std::to_string(field.order()) + " = " + to_decimal(total) +
                                    " subspaces exceeds budget " + std::to_string(budget.subspaces));
  for (const auto& piv : pivot_sets(n, r)) for_each_subspace_with_pivots(field, n, piv, visit);
}

std::vector<Subspace> enumerate_subspaces(const Field& field, std::size_t n, std::size_t r, const Budget& budget) {
  std::vector<Subspace> out;
  for_each_subspace(field, n, r, budget, [&](const Subspace& w) { out.push_back(w); });
  return out;
}

void for_each_member(const Subspace& w, const Budget& budget, const std::function<void(std::span<const Elem>)>& visit) {
  const Field& f = w.field();
  const std::size_t d = w.dim(), n = w.ambient_dim();
  const BigInt total = ipow(BigInt(f.order()), d);
  if (total > budget.members)
    fail(Errc::budget_exceeded, to_decimal(total) + " subspace members exceeds budget " + std::to_string(budget.members));
  // partial[t] = sum of c_i b_i over i < t
  std::vector<std::vector<Elem>> partial(d + 1, std::vector<Elem>(n, 0));
  std::vector<int> coef(d, 0);
  const int q = f.order();
  auto rebuild_from = [&](std::size_t t) {
    for (std::size_t i = t; i < d; ++i) {
      auto b = w.basis().row(i);
      const Elem c = static_cast<Elem>(coef[i]);
      for (std::size_t j = 0; j < n; ++j) partial[i + 1][j] = f.add(partial[i][j], f.mul(c, b[j]));
    }
  };
  rebuild_from(0);
  while (true) {
    visit(partial[d]);
    std::size_t k = d;
    while (k > 0) {
      --k;
      if (++coef[k] < q) break;
      coef[k] = 0;
      if (k == 0) return;
    }
    if (d == 0) return;
    rebuild_from(k);
  }
}

std::vector<Vector> subspace_members(const Subspace& w, const Budget& budget) {
  std::vector<Vector> out;
  for_each_member(w, budget, [&](std::span<const Elem> v) {
    out.emplace_back(w.field(), std::vector<Elem>(v.begin(), v.end()));
  });
  return out;
}

Subspace orthogonal_complement(const Subspace& w) {
  const Field& f = w.field();
  const std::size_t n = w.ambient_dim();
  std::vector<bool> is_pivot(n, false);
  for (std::size_t p : w.pivots()) is_pivot[p] = true;
  std::vector<std::vector<Elem>> gens;
  for (std::size_t fc = 0; fc < n; ++fc) {
    if (is_pivot[fc]) continue;
    std::vector<Elem> x(n, 0);
    x[fc] = 1;
    for (std::size_t i = 0; i < w.dim(); ++i) x[w.pivots()[i]] = f.neg(w.basis()(i, fc));
    gens.push_back(std::move(x));
  }
  return Subspace::row_space(Matrix::from_rows(f, gens, n));
}

Elem dot(const Field& f, std::span<const Elem> a, std::span<const Elem> b) {
  if (a.size() != b.size()) fail(Errc::length_mismatch, "dot product of unequal lengths");
  Elem s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s = f.add(s, f.mul(a[i], b[i]));
  return s;
}

}  // namespace gfx
