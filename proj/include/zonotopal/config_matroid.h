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

#ifndef ZONOTOPAL_CONFIG_MATROID_H_
#define ZONOTOPAL_CONFIG_MATROID_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "zonotopal/qmatrix.h"
#include "zonotopal/rational.h"

namespace zonotopal {

// Bit i set <=> column i selected. Matroid-level enumerations never go past
// 20 columns, so 32 bits suffice.
using ColumnSet = std::uint32_t;

// A rank-n matrix read as the ordered column configuration y_1..y_m.
// Zero columns are allowed; they are the loops of the matroid.
class VectorConfig {
 public:
  // Throws RankDeficient if rank(matrix) < rows.
  explicit VectorConfig(QMatrix matrix);

  std::size_t n() const { return matrix_.rows(); }
  std::size_t m() const { return matrix_.cols(); }
  const QMatrix& matrix() const { return matrix_; }
  const Vector& column(std::size_t i) const { return columns_[i]; }
  const std::vector<Vector>& columns() const { return columns_; }
  bool is_loop(std::size_t i) const { return is_zero(columns_[i]); }

 private:
  QMatrix matrix_;
  std::vector<Vector> columns_;
};

VectorConfig load_config(const QMatrix& m);

// Throws IndexOutOfRange.
std::size_t subset_rank(const VectorConfig& c, const std::vector<std::size_t>& s);
std::size_t subset_rank(const VectorConfig& c, ColumnSet s);

// rank of every column subset, indexed by ColumnSet. Parallel kernel; the
// serial reference lives in reference.h.
std::vector<std::uint8_t> subset_rank_table(const VectorConfig& c,
                                            std::size_t max_m = 20);

// Bivariate polynomial with coefficients keyed by (x-degree, y-degree).
class TuttePoly {
 public:
  using Key = std::pair<int, int>;

  TuttePoly() = default;
  static TuttePoly one();
  static TuttePoly monomial(int i, int j, Integer coeff = 1);

  const std::map<Key, Integer>& coeffs() const { return coeffs_; }
  Integer coeff(int i, int j) const;
  void add(int i, int j, const Integer& c);

  TuttePoly& operator+=(const TuttePoly& other);
  TuttePoly times_x() const;
  TuttePoly times_y() const;

  // "x + y + x^2 + x*y + y^2": total degree ascending, x-degree descending.
  std::string to_string() const;

  friend bool operator==(const TuttePoly&, const TuttePoly&) = default;

 private:
  std::map<Key, Integer> coeffs_;
};

// Corank-nullity expansion over all 2^m subsets. Throws GuardExceeded when
// m > max_m.
TuttePoly tutte(const VectorConfig& c, std::size_t max_m = 20);

// Memoized deletion-contraction, keyed on the sorted multiset of canonical
// columns. Independent of the rank table; used to cross-check tutte().
TuttePoly tutte_deletion_contraction(const VectorConfig& c, std::size_t max_m = 20);

Rational tutte_eval(const TuttePoly& t, const Rational& x, const Rational& y);

// Brute force over every square submatrix.
bool is_totally_unimodular(const QMatrix& m, std::size_t max_side = 12);

// Coloops: columns whose deletion drops the rank. 0-based, ascending.
std::vector<std::size_t> bridge_columns(const VectorConfig& c);

struct CentralReduction {
  QMatrix reduced;
  std::vector<std::size_t> removed_columns;
  std::vector<std::size_t> kept_rows;
  std::vector<std::size_t> dropped_rows;
};

// Deletes every bridge column, then keeps the lexicographically first row
// subset of full rank on the surviving columns.
CentralReduction central_reduce(const QMatrix& m);

// All row subsets that are valid for the reduction above, in lexicographic
// order. The first is the one central_reduce picks.
std::vector<std::vector<std::size_t>> central_reduce_row_choices(const QMatrix& m);
QMatrix central_reduce_with_rows(const QMatrix& m,
                                 const std::vector<std::size_t>& rows);

// sigma[i] is the image of column i of c1. Absent when no rank-preserving
// bijection exists. Throws GuardExceeded when either side has m > max_m.
std::optional<std::vector<std::size_t>> matroid_isomorphic(
    const VectorConfig& c1, const VectorConfig& c2, std::size_t max_m = 12);

// Checks rank_{c1}(S) = rank_{c2}(sigma(S)) for every S.
bool is_matroid_isomorphism(const VectorConfig& c1, const VectorConfig& c2,
                            const std::vector<std::size_t>& sigma);

}  // namespace zonotopal

#endif  // ZONOTOPAL_CONFIG_MATROID_H_
