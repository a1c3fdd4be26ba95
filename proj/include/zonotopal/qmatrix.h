// Copyright 2026 The Authors.
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

#ifndef ZONOTOPAL_QMATRIX_H_
#define ZONOTOPAL_QMATRIX_H_

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "zonotopal/rational.h"

namespace zonotopal {

// Dense row-major matrix of exact rationals.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols);
  QMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static QMatrix from_rows(const std::vector<Vector>& rows);
  static QMatrix from_columns(const std::vector<Vector>& columns,
                              std::size_t rows);
  static QMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Rational& operator()(std::size_t r, std::size_t c) {
    return entries_[r * cols_ + c];
  }
  const Rational& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  std::span<const Rational> row(std::size_t r) const {
    return {entries_.data() + r * cols_, cols_};
  }
  Vector column(std::size_t c) const;
  const std::vector<Rational>& entries() const { return entries_; }

  QMatrix transpose() const;
  QMatrix select_columns(std::span<const std::size_t> columns) const;
  QMatrix select_rows(std::span<const std::size_t> rows) const;
  QMatrix operator-() const;

  bool is_integral() const;

  friend bool operator==(const QMatrix& a, const QMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
           a.entries_ == b.entries_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

QMatrix operator*(const QMatrix& a, const QMatrix& b);
Vector operator*(const QMatrix& a, std::span<const Rational> v);

// Dimension of the row space, by fraction-free elimination.
std::size_t rank(const QMatrix& m);

// Basis of {v : Mv = 0}, each vector in canonical primitive form.
std::vector<Vector> nullspace(const QMatrix& m);

// Throws NonSquare.
Rational det(const QMatrix& m);

// Absent when singular. Throws NonSquare.
std::optional<QMatrix> inverse(const QMatrix& m);

// Integer matrices (rows of equal length). Bareiss elimination with full
// pivoting; the argument is consumed.
std::size_t integer_rank(std::vector<IntVector> rows);

}  // namespace zonotopal

#endif  // ZONOTOPAL_QMATRIX_H_
