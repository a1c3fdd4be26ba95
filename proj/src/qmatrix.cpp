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

#include "zonotopal/qmatrix.h"

#include <utility>

#include "zonotopal/errors.h"

namespace zonotopal {

QMatrix::QMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

QMatrix::QMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw SizeMismatch("ragged matrix literal");
    entries_.insert(entries_.end(), r.begin(), r.end());
  }
}

QMatrix QMatrix::from_rows(const std::vector<Vector>& rows) {
  QMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t r = 0; r < m.rows_; ++r) {
    if (rows[r].size() != m.cols_) throw SizeMismatch("ragged rows");
    for (std::size_t c = 0; c < m.cols_; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

QMatrix QMatrix::from_columns(const std::vector<Vector>& columns,
                              std::size_t rows) {
  QMatrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw SizeMismatch("ragged columns");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Vector QMatrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

QMatrix QMatrix::transpose() const {
  QMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

QMatrix QMatrix::select_columns(std::span<const std::size_t> columns) const {
  QMatrix s(rows_, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j] >= cols_) throw IndexOutOfRange("column index out of range");
    for (std::size_t r = 0; r < rows_; ++r) s(r, j) = (*this)(r, columns[j]);
  }
  return s;
}

QMatrix QMatrix::select_rows(std::span<const std::size_t> rows) const {
  QMatrix s(rows.size(), cols_);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i] >= rows_) throw IndexOutOfRange("row index out of range");
    for (std::size_t c = 0; c < cols_; ++c) s(i, c) = (*this)(rows[i], c);
  }
  return s;
}

QMatrix QMatrix::operator-() const {
  QMatrix n = *this;
  for (auto& x : n.entries_) x = -x;
  return n;
}

bool QMatrix::is_integral() const {
  for (const auto& x : entries_) {
    if (!is_integer(x)) return false;
  }
  return true;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
  if (a.cols() != b.rows()) throw SizeMismatch("matrix product shape");
  QMatrix p(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) p(i, j) += a(i, k) * b(k, j);
    }
  return p;
}

Vector operator*(const QMatrix& a, std::span<const Rational> v) {
  if (a.cols() != v.size()) throw SizeMismatch("matrix-vector shape");
  Vector out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) out[i] = dot(a.row(i), v);
  return out;
}

namespace {

std::vector<IntVector> integer_rows(const QMatrix& m, Integer* scale) {
  std::vector<IntVector> rows;
  rows.reserve(m.rows());
  if (scale) *scale = 1;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Integer den_lcm = 1;
    for (const auto& x : m.row(r))
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.get_den_mpz_t());
    IntVector row;
    row.reserve(m.cols());
    for (const auto& x : m.row(r)) row.push_back(x.get_num() * (den_lcm / x.get_den()));
    rows.push_back(std::move(row));
    if (scale) *scale *= den_lcm;
  }
  return rows;
}

// Bareiss elimination with full pivoting. Returns the rank; when `det` is
// given and the matrix is square, stores the signed determinant.
std::size_t bareiss(std::vector<IntVector>& a, Integer* det) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  std::vector<std::size_t> col_order(cols);
  for (std::size_t j = 0; j < cols; ++j) col_order[j] = j;
  Integer prev = 1;
  int sign = 1;
  std::size_t k = 0;
  for (; k < rows && k < cols; ++k) {
    // Smallest nonzero magnitude keeps intermediate entries short.
    std::size_t pr = rows, pc = cols;
    for (std::size_t i = k; i < rows; ++i)
      for (std::size_t j = k; j < cols; ++j) {
        const Integer& x = a[i][col_order[j]];
        if (x == 0) continue;
        if (pr == rows || abs(x) < abs(a[pr][col_order[pc]])) {
          pr = i;
          pc = j;
        }
      }
    if (pr == rows) break;
    if (pr != k) {
      std::swap(a[pr], a[k]);
      sign = -sign;
    }
    if (pc != k) {
      std::swap(col_order[pc], col_order[k]);
      sign = -sign;
    }
    const Integer pivot = a[k][col_order[k]];
    for (std::size_t i = k + 1; i < rows; ++i) {
      const Integer factor = a[i][col_order[k]];
      for (std::size_t j = k + 1; j < cols; ++j) {
        Integer& x = a[i][col_order[j]];
        x = x * pivot - factor * a[k][col_order[j]];
        mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][col_order[k]] = 0;
    }
    prev = pivot;
  }
  if (det) {
    *det = (rows == cols && k == rows) ? Integer(sign * prev) : Integer(0);
    if (rows == 0) *det = 1;
  }
  return k;
}

}  // namespace

std::size_t integer_rank(std::vector<IntVector> rows) {
  return bareiss(rows, nullptr);
}

std::size_t rank(const QMatrix& m) {
  auto rows = integer_rows(m, nullptr);
  return bareiss(rows, nullptr);
}

Rational det(const QMatrix& m) {
  if (m.rows() != m.cols()) throw NonSquare();
  Integer scale;
  auto rows = integer_rows(m, &scale);
  Integer d;
  bareiss(rows, &d);
  Rational out(d, scale);
  out.canonicalize();
  return out;
}

std::optional<QMatrix> inverse(const QMatrix& m) {
  if (m.rows() != m.cols()) throw NonSquare();
  const std::size_t n = m.rows();
  QMatrix a = m;
  QMatrix inv = QMatrix::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c) == 0) ++p;
    if (p == n) return std::nullopt;
    for (std::size_t j = 0; j < n; ++j) {
      std::swap(a(p, j), a(c, j));
      std::swap(inv(p, j), inv(c, j));
    }
    const Rational f = 1 / a(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      a(c, j) *= f;
      inv(c, j) *= f;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a(i, c) == 0) continue;
      const Rational g = a(i, c);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= g * a(c, j);
        inv(i, j) -= g * inv(c, j);
      }
    }
  }
  return inv;
}

std::vector<Vector> nullspace(const QMatrix& m) {
  // Reduced row echelon form over Q.
  QMatrix a = m;
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
    const Rational inv = 1 / a(r, c);
    for (std::size_t j = c; j < a.cols(); ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c) == 0) continue;
      const Rational f = a(i, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    pivot_cols.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : pivot_cols) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(a.cols());
    v[free] = 1;
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) v[pivot_cols[i]] = -a(i, free);
    auto canon = canonical_primitive(std::span<const Rational>(v));
    basis.push_back(to_rational(canon));
  }
  return basis;
}

}  // namespace zonotopal
