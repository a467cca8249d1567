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

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "bigint.hpp"
#include "gf.hpp"

namespace gfx {

/// Limits on exhaustive enumeration. Exceeding one raises Errc::budget_exceeded
/// before any work is done.
struct Budget {
  std::uint64_t subspaces = 100'000'000;
  std::uint64_t members = 10'000'000;
};

class Vector {
 public:
  Vector(Field field, std::vector<Elem> entries);
  Vector(Field field, std::size_t length) : field_(std::move(field)), entries_(length, 0) {}

  const Field& field() const noexcept { return field_; }
  std::size_t size() const noexcept { return entries_.size(); }
  Elem operator[](std::size_t i) const noexcept { return entries_[i]; }
  Elem& operator[](std::size_t i) noexcept { return entries_[i]; }
  std::span<const Elem> entries() const noexcept { return entries_; }

  bool operator==(const Vector& o) const { return field_ == o.field_ && entries_ == o.entries_; }
  auto operator<=>(const Vector& o) const { return entries_ <=> o.entries_; }

 private:
  Field field_;
  std::vector<Elem> entries_;
};

/// Dense row-major matrix over GF(q). Columns model vector collections.
class Matrix {
 public:
  Matrix(Field field, std::size_t rows, std::size_t cols);
  Matrix(Field field, std::size_t rows, std::size_t cols, std::vector<Elem> entries);

  static Matrix from_rows(Field field, const std::vector<std::vector<Elem>>& rows, std::size_t cols = 0);
  /// Columns of equal length; an empty list gives a rows×0 matrix.
  static Matrix from_columns(Field field, std::size_t rows, std::span<const std::vector<Elem>> columns);

  const Field& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Elem operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * cols_ + j]; }
  Elem& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * cols_ + j]; }

  std::span<const Elem> row(std::size_t i) const noexcept { return {data_.data() + i * cols_, cols_}; }
  std::span<Elem> row(std::size_t i) noexcept { return {data_.data() + i * cols_, cols_}; }
  std::vector<Elem> column(std::size_t j) const;
  std::vector<std::vector<Elem>> columns() const;
  std::span<const Elem> data() const noexcept { return data_; }

  bool operator==(const Matrix& o) const {
    return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

 private:
  Field field_;
  std::size_t rows_, cols_;
  std::vector<Elem> data_;
};

struct RrefResult {
  Matrix reduced;
  std::size_t rank;
  std::vector<std::size_t> pivots;
};

/// Canonical reduced row-echelon form (Gauss-Jordan).
RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);

/// Rank of the columns after adjoining a row of all ones; the affine rank of
/// the column collection. rank(m) <= a_rank(m) <= rank(m) + 1.
std::size_t a_rank(const Matrix& m);

/// Throws Errc::length_mismatch when row.size() != m.cols().
Matrix append_row(const Matrix& m, std::span<const Elem> row);
/// Throws Errc::index_out_of_range.
Matrix delete_row(const Matrix& m, std::size_t index);
Matrix append_constant_row(const Matrix& m, Elem value);

/// A subspace of GF(q)^n stored by its canonical RREF basis (dim × n).
class Subspace {
 public:
  /// Row space of `generators` (any shape with cols = n).
  static Subspace row_space(const Matrix& generators);
  /// Column space of `m` as a subspace of GF(q)^{rows}.
  static Subspace column_space(const Matrix& m);
  /// Trusts that `basis` is already canonical RREF with the given pivots.
  static Subspace from_canonical(Matrix basis, std::vector<std::size_t> pivots);

  const Field& field() const noexcept { return basis_.field(); }
  std::size_t ambient_dim() const noexcept { return basis_.cols(); }
  std::size_t dim() const noexcept { return basis_.rows(); }
  const Matrix& basis() const noexcept { return basis_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  bool contains(std::span<const Elem> v) const;

  bool operator==(const Subspace& o) const { return basis_ == o.basis_; }

 private:
  Subspace(Matrix basis, std::vector<std::size_t> pivots) : basis_(std::move(basis)), pivots_(std::move(pivots)) {}
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

/// Number of r-dimensional subspaces of GF(q)^n.
BigInt gaussian_binomial(int q, std::size_t n, std::size_t r);

/// All r-subsets of [0, n) in lexicographic order.
std::vector<std::vector<std::size_t>> pivot_sets(std::size_t n, std::size_t r);

/// Free (non-pivot) entry positions of an RREF profile, row-major: for row i,
/// the non-pivot columns to the right of pivots[i].
std::vector<std::pair<std::size_t, std::size_t>> free_positions(std::size_t n, std::span<const std::size_t> pivots);

/// Visits every subspace with the given pivot set. Order: the free entries
/// read row-major form a base-q counter, first entry most significant.
void for_each_subspace_with_pivots(const Field& field, std::size_t n, std::span<const std::size_t> pivots,
                                   const std::function<void(const Subspace&)>& visit);

/// Visits every r-dimensional subspace of GF(q)^n exactly once, pivot sets
/// lexicographically then free entries as above.
void for_each_subspace(const Field& field, std::size_t n, std::size_t r, const Budget& budget,
                       const std::function<void(const Subspace&)>& visit);

std::vector<Subspace> enumerate_subspaces(const Field& field, std::size_t n, std::size_t r,
                                          const Budget& budget = {});

/// All q^dim members, coefficient vectors swept lexicographically.
void for_each_member(const Subspace& w, const Budget& budget, const std::function<void(std::span<const Elem>)>& visit);
std::vector<Vector> subspace_members(const Subspace& w, const Budget& budget = {});

/// {x : x·w = 0 for all w in W} under the standard dot product.
Subspace orthogonal_complement(const Subspace& w);

Elem dot(const Field& f, std::span<const Elem> a, std::span<const Elem> b);

}  // namespace gfx
