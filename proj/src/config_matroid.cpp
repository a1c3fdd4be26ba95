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

#include "zonotopal/config_matroid.h"

#include <algorithm>
#include <functional>
#include <sstream>

#include "combinatorics.h"
#include "internal.h"
#include "zonotopal/errors.h"

namespace zonotopal {

using detail::binomial;
using detail::first_combination;
using detail::next_combination;
using detail::popcount;

VectorConfig::VectorConfig(QMatrix matrix) : matrix_(std::move(matrix)) {
  const std::size_t r = rank(matrix_);
  if (r < matrix_.rows()) throw RankDeficient(r);
  columns_.reserve(matrix_.cols());
  for (std::size_t c = 0; c < matrix_.cols(); ++c) columns_.push_back(matrix_.column(c));
}

VectorConfig load_config(const QMatrix& m) { return VectorConfig(m); }

namespace {

std::vector<IntVector> integer_columns(const VectorConfig& c) {
  std::vector<IntVector> cols;
  cols.reserve(c.m());
  for (const auto& col : c.columns()) cols.push_back(primitive(std::span<const Rational>(col)));
  return cols;
}

std::size_t columns_rank(const std::vector<IntVector>& cols, ColumnSet s) {
  std::vector<IntVector> rows;
  for (std::size_t i = 0; i < cols.size(); ++i)
    if (s >> i & 1u) rows.push_back(cols[i]);
  if (rows.empty()) return 0;
  return integer_rank(std::move(rows));
}

// Row-echelon basis grown one vector at a time. Every stored row has zeros
// at the pivots of the rows stored before it.
class Echelon {
 public:
  // Adds v if independent; returns whether it was added.
  bool insert(IntVector v) {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const std::size_t p = pivots_[r];
      if (v[p] == 0) continue;
      const Integer a = rows_[r][p];
      const Integer b = v[p];
      for (std::size_t j = 0; j < v.size(); ++j) v[j] = v[j] * a - b * rows_[r][j];
      v = primitive(std::span<const Integer>(v));
    }
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (v[j] != 0) {
        rows_.push_back(std::move(v));
        pivots_.push_back(j);
        return true;
      }
    }
    return false;
  }
  std::size_t size() const { return rows_.size(); }

 private:
  std::vector<IntVector> rows_;
  std::vector<std::size_t> pivots_;
};

void fill_ranks(const std::vector<IntVector>& cols, std::size_t next, ColumnSet mask,
                const Echelon& basis, std::vector<std::uint8_t>& table) {
  table[mask] = static_cast<std::uint8_t>(basis.size());
  for (std::size_t j = next; j < cols.size(); ++j) {
    Echelon grown = basis;
    grown.insert(cols[j]);
    fill_ranks(cols, j + 1, mask | (ColumnSet{1} << j), grown, table);
  }
}

}  // namespace

std::size_t subset_rank(const VectorConfig& c, ColumnSet s) {
  if (c.m() < 32 && (s >> c.m()) != 0) throw IndexOutOfRange("column set out of range");
  return columns_rank(integer_columns(c), s);
}

std::size_t subset_rank(const VectorConfig& c, const std::vector<std::size_t>& s) {
  for (auto i : s)
    if (i >= c.m()) throw IndexOutOfRange("column index out of range");
  return rank(c.matrix().select_columns(s));
}

std::vector<std::uint8_t> subset_rank_table(const VectorConfig& c, std::size_t max_m) {
  if (c.m() > max_m || c.m() > 30) throw GuardExceeded("too many columns for a rank table");
  const auto cols = integer_columns(c);
  const std::size_t m = cols.size();
  std::vector<std::uint8_t> table(std::size_t{1} << m);
  // Fix the membership of the first `split` columns per task; each task
  // walks the subsets of the remaining columns.
  const std::size_t split = std::min<std::size_t>(m, 6);
  const long tasks = 1L << split;
#pragma omp parallel for schedule(dynamic)
  for (long prefix = 0; prefix < tasks; ++prefix) {
    Echelon basis;
    for (std::size_t j = 0; j < split; ++j)
      if (prefix >> j & 1) basis.insert(cols[j]);
    fill_ranks(cols, split, static_cast<ColumnSet>(prefix), basis, table);
  }
  return table;
}

TuttePoly TuttePoly::one() { return monomial(0, 0); }

TuttePoly TuttePoly::monomial(int i, int j, Integer coeff) {
  TuttePoly t;
  t.add(i, j, coeff);
  return t;
}

Integer TuttePoly::coeff(int i, int j) const {
  auto it = coeffs_.find({i, j});
  return it == coeffs_.end() ? Integer(0) : it->second;
}

void TuttePoly::add(int i, int j, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = coeffs_.try_emplace({i, j}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coeffs_.erase(it);
  }
}

TuttePoly& TuttePoly::operator+=(const TuttePoly& other) {
  for (const auto& [key, c] : other.coeffs_) add(key.first, key.second, c);
  return *this;
}

TuttePoly TuttePoly::times_x() const {
  TuttePoly t;
  for (const auto& [key, c] : coeffs_) t.coeffs_[{key.first + 1, key.second}] = c;
  return t;
}

TuttePoly TuttePoly::times_y() const {
  TuttePoly t;
  for (const auto& [key, c] : coeffs_) t.coeffs_[{key.first, key.second + 1}] = c;
  return t;
}

std::string TuttePoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::vector<std::pair<Key, Integer>> terms(coeffs_.begin(), coeffs_.end());
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    const int da = a.first.first + a.first.second;
    const int db = b.first.first + b.first.second;
    if (da != db) return da < db;
    return a.first.first > b.first.first;
  });
  auto power = [](const char* var, int e) -> std::string {
    if (e == 0) return "";
    if (e == 1) return var;
    return std::string(var) + "^" + std::to_string(e);
  };
  std::ostringstream out;
  bool first = true;
  for (const auto& [key, c] : terms) {
    Integer mag = abs(c);
    if (!first) out << (c < 0 ? " - " : " + ");
    else if (c < 0) out << "-";
    first = false;
    const std::string xs = power("x", key.first);
    const std::string ys = power("y", key.second);
    std::string mono = xs;
    if (!ys.empty()) mono += (mono.empty() ? "" : "*") + ys;
    if (mono.empty()) {
      out << mag.get_str();
    } else {
      if (mag != 1) out << mag.get_str() << "*";
      out << mono;
    }
  }
  return out.str();
}

namespace {

// T = sum over (a, b) of counts[a][b] * (x-1)^a (y-1)^b.
TuttePoly expand_corank_nullity(const std::vector<std::vector<Integer>>& counts) {
  TuttePoly t;
  for (std::size_t a = 0; a < counts.size(); ++a)
    for (std::size_t b = 0; b < counts[a].size(); ++b) {
      const Integer& n = counts[a][b];
      if (n == 0) continue;
      for (std::size_t i = 0; i <= a; ++i)
        for (std::size_t j = 0; j <= b; ++j) {
          Integer c = n * binomial(a, i) * binomial(b, j);
          if ((a - i + b - j) % 2) c = -c;
          t.add(static_cast<int>(i), static_cast<int>(j), c);
        }
    }
  return t;
}

}  // namespace

namespace detail {

TuttePoly tutte_from_rank_table(const std::vector<std::uint8_t>& table, std::size_t m) {
  const std::size_t full = table.back();
  std::vector<std::vector<Integer>> counts(full + 1, std::vector<Integer>(m + 1));
  for (std::size_t s = 0; s < table.size(); ++s) {
    const std::size_t r = table[s];
    const std::size_t size = popcount(static_cast<ColumnSet>(s));
    ++counts[full - r][size - r];
  }
  return expand_corank_nullity(counts);
}

}  // namespace detail

TuttePoly tutte(const VectorConfig& c, std::size_t max_m) {
  if (c.m() > max_m) throw GuardExceeded("tutte: too many columns");
  return detail::tutte_from_rank_table(subset_rank_table(c, max_m), c.m());
}

namespace {

using ColumnList = std::vector<IntVector>;

class DeletionContraction {
 public:
  TuttePoly run(ColumnList cols) {
    if (cols.empty()) return TuttePoly::one();
    ColumnList key = cols;
    std::sort(key.begin(), key.end());
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    const IntVector e = cols.back();
    cols.pop_back();
    TuttePoly result;
    const bool loop = std::all_of(e.begin(), e.end(), [](const Integer& x) { return x == 0; });
    if (loop) {
      result = run(cols).times_y();
    } else {
      const std::size_t dim = e.size();
      const bool coloop = cols.empty() || integer_rank(cols) < dim;
      ColumnList contracted = contract(cols, e);
      if (coloop) {
        result = run(std::move(contracted)).times_x();
      } else {
        result = run(cols);
        result += run(std::move(contracted));
      }
    }
    memo_.emplace(std::move(key), result);
    return result;
  }

 private:
  static ColumnList contract(const ColumnList& cols, const IntVector& e) {
    std::size_t p = 0;
    while (e[p] == 0) ++p;
    ColumnList out;
    out.reserve(cols.size());
    for (const auto& v : cols) {
      IntVector w;
      w.reserve(v.size() - 1);
      for (std::size_t j = 0; j < v.size(); ++j) {
        if (j == p) continue;
        w.push_back(e[p] * v[j] - v[p] * e[j]);
      }
      out.push_back(canonical_primitive(std::span<const Integer>(w)));
    }
    return out;
  }

  std::map<ColumnList, TuttePoly> memo_;
};

}  // namespace

TuttePoly tutte_deletion_contraction(const VectorConfig& c, std::size_t max_m) {
  if (c.m() > max_m) throw GuardExceeded("tutte: too many columns");
  ColumnList cols;
  for (const auto& col : c.columns())
    cols.push_back(canonical_primitive(std::span<const Rational>(col)));
  return DeletionContraction().run(std::move(cols));
}

Rational tutte_eval(const TuttePoly& t, const Rational& x, const Rational& y) {
  Rational sum = 0;
  for (const auto& [key, c] : t.coeffs()) {
    Rational term = c;
    for (int i = 0; i < key.first; ++i) term *= x;
    for (int j = 0; j < key.second; ++j) term *= y;
    sum += term;
  }
  return sum;
}

bool is_totally_unimodular(const QMatrix& m, std::size_t max_side) {
  const std::size_t side = std::min(m.rows(), m.cols());
  if (side > max_side) throw GuardExceeded("TU test: matrix too large");
  if (binomial(m.rows() + m.cols(), m.rows()) > Integer(1) << 24)
    throw GuardExceeded("TU test: too many square submatrices");
  for (const auto& x : m.entries())
    if (x != 0 && x != 1 && x != -1) return false;
  for (std::size_t k = 2; k <= side; ++k) {
    auto rows = first_combination(k);
    do {
      const QMatrix strip = m.select_rows(rows);
      auto cols = first_combination(k);
      do {
        const Rational d = det(strip.select_columns(cols));
        if (d != 0 && d != 1 && d != -1) return false;
      } while (next_combination(cols, m.cols()));
    } while (next_combination(rows, m.rows()));
  }
  return true;
}

std::vector<std::size_t> bridge_columns(const VectorConfig& c) {
  std::vector<std::size_t> bridges;
  std::vector<std::size_t> others;
  for (std::size_t i = 0; i < c.m(); ++i) {
    others.clear();
    for (std::size_t j = 0; j < c.m(); ++j)
      if (j != i) others.push_back(j);
    if (rank(c.matrix().select_columns(others)) < c.n()) bridges.push_back(i);
  }
  return bridges;
}

namespace {

struct Survivors {
  QMatrix matrix;
  std::vector<std::size_t> removed;
  std::size_t target_rank;
};

Survivors delete_bridges(const QMatrix& m) {
  const VectorConfig config(m);
  auto removed = bridge_columns(config);
  std::vector<std::size_t> kept;
  for (std::size_t i = 0, r = 0; i < m.cols(); ++i) {
    if (r < removed.size() && removed[r] == i) {
      ++r;
      continue;
    }
    kept.push_back(i);
  }
  const std::size_t target = m.rows() - removed.size();
  return {m.select_columns(kept), std::move(removed), target};
}

}  // namespace

std::vector<std::vector<std::size_t>> central_reduce_row_choices(const QMatrix& m) {
  const Survivors s = delete_bridges(m);
  std::vector<std::vector<std::size_t>> choices;
  auto rows = first_combination(s.target_rank);
  do {
    if (rank(s.matrix.select_rows(rows)) == s.target_rank) choices.push_back(rows);
  } while (s.target_rank > 0 && next_combination(rows, m.rows()));
  return choices;
}

QMatrix central_reduce_with_rows(const QMatrix& m, const std::vector<std::size_t>& rows) {
  const Survivors s = delete_bridges(m);
  if (rows.size() != s.target_rank) throw SizeMismatch("wrong number of kept rows");
  QMatrix reduced = s.matrix.select_rows(rows);
  if (rank(reduced) != s.target_rank) throw RankDeficient(rank(reduced));
  return reduced;
}

CentralReduction central_reduce(const QMatrix& m) {
  Survivors s = delete_bridges(m);
  CentralReduction out;
  out.removed_columns = s.removed;
  auto rows = first_combination(s.target_rank);
  do {
    if (rank(s.matrix.select_rows(rows)) == s.target_rank) {
      out.kept_rows = rows;
      break;
    }
  } while (s.target_rank > 0 && next_combination(rows, m.rows()));
  for (std::size_t i = 0, k = 0; i < m.rows(); ++i) {
    if (k < out.kept_rows.size() && out.kept_rows[k] == i) {
      ++k;
      continue;
    }
    out.dropped_rows.push_back(i);
  }
  out.reduced = s.matrix.select_rows(out.kept_rows);
  return out;
}

namespace {

// Per-element invariant: loop flag, coloop flag and the number of circuits
// of each size through the element.
std::vector<std::vector<int>> element_signatures(const std::vector<std::uint8_t>& ranks,
                                                 std::size_t m) {
  std::vector<std::vector<int>> sig(m, std::vector<int>(m + 3, 0));
  const ColumnSet all = static_cast<ColumnSet>((std::size_t{1} << m) - 1);
  for (std::size_t e = 0; e < m; ++e) {
    sig[e][m + 1] = ranks[ColumnSet{1} << e] == 0;
    sig[e][m + 2] = ranks[all & ~(ColumnSet{1} << e)] < ranks[all];
  }
  for (std::size_t s = 1; s < ranks.size(); ++s) {
    const auto set = static_cast<ColumnSet>(s);
    const int size = popcount(set);
    if (ranks[s] != size - 1) continue;
    bool circuit = true;
    for (std::size_t e = 0; e < m && circuit; ++e)
      if (set >> e & 1u) circuit = ranks[set & ~(ColumnSet{1} << e)] == size - 1;
    if (!circuit) continue;
    for (std::size_t e = 0; e < m; ++e)
      if (set >> e & 1u) ++sig[e][size];
  }
  return sig;
}

std::vector<std::size_t> rank_profile(const std::vector<std::uint8_t>& ranks, std::size_t m) {
  std::vector<std::size_t> profile((m + 1) * (m + 1), 0);
  for (std::size_t s = 0; s < ranks.size(); ++s)
    ++profile[popcount(static_cast<ColumnSet>(s)) * (m + 1) + ranks[s]];
  return profile;
}

}  // namespace

std::optional<std::vector<std::size_t>> matroid_isomorphic(const VectorConfig& c1,
                                                           const VectorConfig& c2,
                                                           std::size_t max_m) {
  if (c1.m() > max_m || c2.m() > max_m) throw GuardExceeded("matroid isomorphism: too many columns");
  if (c1.m() != c2.m() || c1.n() != c2.n()) return std::nullopt;
  const std::size_t m = c1.m();
  const auto r1 = subset_rank_table(c1, max_m);
  const auto r2 = subset_rank_table(c2, max_m);
  if (rank_profile(r1, m) != rank_profile(r2, m)) return std::nullopt;
  const auto sig1 = element_signatures(r1, m);
  const auto sig2 = element_signatures(r2, m);

  std::vector<std::size_t> sigma(m);
  std::vector<bool> used(m, false);
  std::vector<ColumnSet> image(std::size_t{1} << m, 0);

  std::function<bool(std::size_t)> extend = [&](std::size_t i) -> bool {
    if (i == m) return true;
    const ColumnSet bit = ColumnSet{1} << i;
    for (std::size_t j = 0; j < m; ++j) {
      if (used[j] || sig1[i] != sig2[j]) continue;
      bool ok = true;
      for (ColumnSet s = 0; s < bit && ok; ++s) {
        image[s | bit] = image[s] | (ColumnSet{1} << j);
        ok = r1[s | bit] == r2[image[s | bit]];
      }
      if (!ok) continue;
      used[j] = true;
      sigma[i] = j;
      if (extend(i + 1)) return true;
      used[j] = false;
    }
    return false;
  };
  if (!extend(0)) return std::nullopt;
  return sigma;
}

bool is_matroid_isomorphism(const VectorConfig& c1, const VectorConfig& c2,
                            const std::vector<std::size_t>& sigma) {
  const std::size_t m = c1.m();
  if (c2.m() != m || sigma.size() != m) return false;
  std::vector<bool> hit(m, false);
  for (auto j : sigma) {
    if (j >= m || hit[j]) return false;
    hit[j] = true;
  }
  const auto r1 = subset_rank_table(c1, 20);
  const auto r2 = subset_rank_table(c2, 20);
  for (std::size_t s = 0; s < r1.size(); ++s) {
    ColumnSet t = 0;
    for (std::size_t i = 0; i < m; ++i)
      if (s >> i & 1) t |= ColumnSet{1} << sigma[i];
    if (r1[s] != r2[t]) return false;
  }
  return true;
}

}  // namespace zonotopal
