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

#include "zonotopal/zequiv.h"

#include <algorithm>
#include <functional>
#include <random>
#include <stdexcept>

#include "zonotopal/config_matroid.h"
#include "zonotopal/errors.h"

namespace zonotopal {

const char* to_string(Verdict v) {
  return v == Verdict::kExact ? "exact" : "probabilistic";
}

ProjClasses proj_classes(const QMatrix& a) {
  ProjClasses out;
  for (std::size_t k = 0; k < a.cols(); ++k) {
    const Vector col = a.column(k);
    if (is_zero(col)) {
      ++out.zero_columns;
      continue;
    }
    ++out.classes[ProjPoint(std::span<const Rational>(col))];
  }
  return out;
}

namespace {

// Linear constraints on g (row-major n x n unknowns) forcing g u || v:
// (g u)_r v_s - (g u)_s v_r = 0 for r < s.
void add_parallel_constraints(const IntVector& u, const IntVector& v, std::size_t n,
                              std::vector<Vector>& rows) {
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t s = r + 1; s < n; ++s) {
      Vector row(n * n);
      for (std::size_t l = 0; l < n; ++l) {
        row[r * n + l] = Rational(u[l] * v[s]);
        row[s * n + l] = Rational(-u[l] * v[r]);
      }
      rows.push_back(std::move(row));
    }
}

// Basis of the solution subspace, each element reshaped to an n x n matrix.
std::vector<QMatrix> solution_space(const std::vector<Vector>& rows, std::size_t n) {
  std::vector<Vector> basis;
  if (rows.empty()) {
    for (std::size_t i = 0; i < n * n; ++i) {
      Vector e(n * n);
      e[i] = 1;
      basis.push_back(std::move(e));
    }
  } else {
    basis = nullspace(QMatrix::from_rows(rows));
  }
  std::vector<QMatrix> out;
  for (const auto& b : basis) {
    QMatrix g(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) g(r, c) = b[r * n + c];
    out.push_back(std::move(g));
  }
  return out;
}

QMatrix combine(const std::vector<QMatrix>& basis, const std::vector<Rational>& t, std::size_t n) {
  QMatrix g(n, n);
  for (std::size_t l = 0; l < basis.size(); ++l) {
    if (t[l] == 0) continue;
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) g(r, c) += t[l] * basis[l](r, c);
  }
  return g;
}

// Searches span(basis) for an invertible matrix. det(sum t_l B_l) has degree
// at most n in each t_l, so a nonzero det shows up on the grid {0..n}^d.
// Past the grid limit, random samples are used and `probabilistic` is set
// when nothing is found.
std::optional<QMatrix> find_invertible(const std::vector<QMatrix>& basis, std::size_t n,
                                       const ZEquivOptions& opts, std::mt19937_64& rng,
                                       bool* probabilistic) {
  const std::size_t d = basis.size();
  if (d == 0) return std::nullopt;
  std::vector<Rational> t(d, 1);
  QMatrix g = combine(basis, t, n);
  if (det(g) != 0) return g;

  Integer grid = 1;
  for (std::size_t l = 0; l < d && grid <= opts.grid_limit; ++l) grid *= static_cast<unsigned long>(n + 1);
  if (grid <= opts.grid_limit) {
    std::vector<std::size_t> digit(d, 0);
    while (true) {
      for (std::size_t l = 0; l < d; ++l) t[l] = static_cast<unsigned long>(digit[l]);
      g = combine(basis, t, n);
      if (det(g) != 0) return g;
      std::size_t l = 0;
      while (l < d && ++digit[l] == n + 1) digit[l++] = 0;
      if (l == d) return std::nullopt;
    }
  }
  std::uniform_int_distribution<long> draw(-1'000'000, 1'000'000);
  for (std::size_t s = 0; s < opts.random_samples; ++s) {
    for (auto& x : t) x = draw(rng);
    g = combine(basis, t, n);
    if (det(g) != 0) return g;
  }
  if (probabilistic) *probabilistic = true;
  return std::nullopt;
}

// Pairs columns class by class (and zero columns with zero columns) and
// reads off the per-column scales.
ZWitness assemble(const QMatrix& a1, const QMatrix& a2, const QMatrix& g,
                  const std::vector<std::size_t>& column_map) {
  const std::size_t m = a1.cols();
  ZWitness w{g, std::vector<std::size_t>(m), std::vector<Rational>(m)};
  for (std::size_t j1 = 0; j1 < m; ++j1) {
    const std::size_t j2 = column_map[j1];
    w.perm[j2] = j1;
    const Vector image = g * std::span<const Rational>(a1.column(j1));
    const Vector target = a2.column(j2);
    w.scales[j2] = 1;
    for (std::size_t r = 0; r < image.size(); ++r) {
      if (image[r] != 0) {
        w.scales[j2] = target[r] / image[r];
        break;
      }
    }
  }
  return w;
}

// column_map[j1] = j2 from a class map, pairing columns in index order.
std::vector<std::size_t> columns_from_classes(const QMatrix& a1, const QMatrix& a2,
                                              const std::map<ProjPoint, ProjPoint>& class_map) {
  std::map<ProjPoint, std::vector<std::size_t>> pool;
  std::vector<std::size_t> zeros2;
  for (std::size_t j = 0; j < a2.cols(); ++j) {
    const Vector col = a2.column(j);
    if (is_zero(col)) zeros2.push_back(j);
    else pool[ProjPoint(std::span<const Rational>(col))].push_back(j);
  }
  for (auto& [p, cols] : pool) std::reverse(cols.begin(), cols.end());
  std::reverse(zeros2.begin(), zeros2.end());
  std::vector<std::size_t> map(a1.cols());
  for (std::size_t j = 0; j < a1.cols(); ++j) {
    const Vector col = a1.column(j);
    auto& src = is_zero(col) ? zeros2 : pool.at(class_map.at(ProjPoint(std::span<const Rational>(col))));
    map[j] = src.back();
    src.pop_back();
  }
  return map;
}

void require_full_rank(const QMatrix& a) {
  const std::size_t r = rank(a);
  if (r < a.rows()) throw RankDeficient(r);
}

}  // namespace

bool verify_witness(const QMatrix& a1, const QMatrix& a2, const ZWitness& w) {
  const std::size_t n = a1.rows(), m = a1.cols();
  if (a2.rows() != n || a2.cols() != m) return false;
  if (w.g.rows() != n || w.g.cols() != n || w.perm.size() != m || w.scales.size() != m) return false;
  if (det(w.g) == 0) return false;
  std::vector<bool> hit(m, false);
  for (auto j : w.perm) {
    if (j >= m || hit[j]) return false;
    hit[j] = true;
  }
  for (const auto& s : w.scales)
    if (s == 0) return false;
  const QMatrix ga = w.g * a1;
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t r = 0; r < n; ++r)
      if (a2(r, j) != w.scales[j] * ga(r, w.perm[j])) return false;
  return true;
}

ZWitness compose(const ZWitness& w12, const ZWitness& w23) {
  const std::size_t m = w12.perm.size();
  ZWitness w{w23.g * w12.g, std::vector<std::size_t>(m), std::vector<Rational>(m)};
  for (std::size_t j = 0; j < m; ++j) {
    w.perm[j] = w12.perm[w23.perm[j]];
    w.scales[j] = w23.scales[j] * w12.scales[w23.perm[j]];
  }
  return w;
}

ZWitness invert(const ZWitness& w) {
  const auto g = inverse(w.g);
  if (!g) throw std::invalid_argument("witness has a singular g");
  const std::size_t m = w.perm.size();
  ZWitness out{*g, std::vector<std::size_t>(m), std::vector<Rational>(m)};
  for (std::size_t j = 0; j < m; ++j) {
    out.perm[w.perm[j]] = j;
    out.scales[w.perm[j]] = 1 / w.scales[j];
  }
  return out;
}

ZEquivResult z_equivalent(const QMatrix& a1, const QMatrix& a2, const ZEquivOptions& opts) {
  require_full_rank(a1);
  require_full_rank(a2);
  if (a1.cols() > opts.max_m || a2.cols() > opts.max_m) throw GuardExceeded("z-equivalence: too many columns");
  ZEquivResult result;
  if (a1.rows() != a2.rows() || a1.cols() != a2.cols()) return result;
  const std::size_t n = a1.rows();
  const auto pc1 = proj_classes(a1);
  const auto pc2 = proj_classes(a2);
  if (pc1.zero_columns != pc2.zero_columns) return result;
  auto profile = [](const ProjClasses& pc) {
    std::vector<std::size_t> p;
    for (const auto& [pt, mult] : pc.classes) p.push_back(mult);
    std::sort(p.begin(), p.end());
    return p;
  };
  if (profile(pc1) != profile(pc2)) return result;
  if (tutte(VectorConfig(a1)) != tutte(VectorConfig(a2))) return result;

  // Classes of A1, with a basis first so the solution space collapses early.
  std::vector<std::pair<ProjPoint, std::size_t>> left;
  {
    std::vector<std::pair<ProjPoint, std::size_t>> rest;
    std::vector<Vector> chosen;
    for (const auto& [pt, mult] : pc1.classes) {
      chosen.push_back(to_rational(pt.coords()));
      if (rank(QMatrix::from_rows(chosen)) == chosen.size()) {
        left.emplace_back(pt, mult);
      } else {
        chosen.pop_back();
        rest.emplace_back(pt, mult);
      }
    }
    left.insert(left.end(), rest.begin(), rest.end());
  }
  const std::vector<std::pair<ProjPoint, std::size_t>> right(pc2.classes.begin(), pc2.classes.end());
  std::map<ProjPoint, std::size_t> right_index;
  for (std::size_t j = 0; j < right.size(); ++j) right_index.emplace(right[j].first, j);

  std::mt19937_64 rng(opts.seed);
  bool probabilistic = false;
  std::vector<std::size_t> assigned(left.size());
  std::vector<bool> used(right.size(), false);
  std::optional<QMatrix> found;

  // Once g is pinned down up to scale, the rest of the matching is forced.
  auto complete_forced = [&](std::size_t from, const QMatrix& g) {
    std::vector<bool> taken = used;
    for (std::size_t i = from; i < left.size(); ++i) {
      const Vector image = g * std::span<const Rational>(to_rational(left[i].first.coords()));
      auto it = right_index.find(ProjPoint(std::span<const Rational>(image)));
      if (it == right_index.end()) return false;
      const std::size_t j = it->second;
      if (taken[j] || right[j].second != left[i].second) return false;
      taken[j] = true;
      assigned[i] = j;
    }
    return true;
  };

  std::function<bool(std::size_t, std::vector<Vector>&)> search =
      [&](std::size_t i, std::vector<Vector>& rows) -> bool {
    const auto space = solution_space(rows, n);
    if (space.empty()) return false;
    if (space.size() == 1 && i < left.size()) {
      if (det(space[0]) == 0) return false;
      if (!complete_forced(i, space[0])) return false;
      found = space[0];
      return true;
    }
    if (i == left.size()) {
      found = find_invertible(space, n, opts, rng, &probabilistic);
      return found.has_value();
    }
    for (std::size_t j = 0; j < right.size(); ++j) {
      if (used[j] || right[j].second != left[i].second) continue;
      const std::size_t before = rows.size();
      add_parallel_constraints(left[i].first.coords(), right[j].first.coords(), n, rows);
      used[j] = true;
      assigned[i] = j;
      if (search(i + 1, rows)) return true;
      used[j] = false;
      rows.resize(before);
    }
    return false;
  };

  std::vector<Vector> rows;
  if (!search(0, rows)) {
    result.verdict = probabilistic ? Verdict::kProbabilistic : Verdict::kExact;
    return result;
  }
  std::map<ProjPoint, ProjPoint> class_map;
  for (std::size_t i = 0; i < left.size(); ++i) class_map.emplace(left[i].first, right[assigned[i]].first);
  ZWitness w = assemble(a1, a2, *found, columns_from_classes(a1, a2, class_map));
  if (!verify_witness(a1, a2, w)) throw std::logic_error("z-equivalence witness failed verification");
  result.witness = std::move(w);
  return result;
}

std::optional<ZWitness> unimodular_equiv_via_matroid(const QMatrix& a1, const QMatrix& a2,
                                                     const ZEquivOptions& opts) {
  if (!is_totally_unimodular(a1) || !is_totally_unimodular(a2)) throw NotUnimodular();
  require_full_rank(a1);
  require_full_rank(a2);
  if (a1.cols() > opts.max_m || a2.cols() > opts.max_m) throw GuardExceeded("z-equivalence: too many columns");
  if (a1.rows() != a2.rows() || a1.cols() != a2.cols()) return std::nullopt;
  const VectorConfig c1(a1), c2(a2);
  const auto sigma = matroid_isomorphic(c1, c2, opts.max_m);
  if (!sigma) return std::nullopt;

  const std::size_t n = a1.rows();
  std::vector<Vector> rows;
  std::map<ProjPoint, ProjPoint> class_map;
  for (std::size_t e = 0; e < a1.cols(); ++e) {
    const Vector y1 = a1.column(e);
    const Vector y2 = a2.column((*sigma)[e]);
    if (is_zero(y1) != is_zero(y2)) throw std::logic_error("matroid isomorphism moved a loop");
    if (is_zero(y1)) continue;
    const ProjPoint u(std::span<const Rational>{y1}), v(std::span<const Rational>{y2});
    auto [it, inserted] = class_map.emplace(u, v);
    if (!inserted) {
      if (!(it->second == v)) throw std::logic_error("matroid isomorphism splits a parallel class");
      continue;
    }
    add_parallel_constraints(u.coords(), v.coords(), n, rows);
  }
  std::mt19937_64 rng(opts.seed);
  const auto g = find_invertible(solution_space(rows, n), n, opts, rng, nullptr);
  if (!g) throw NonWitnessableIsoMatroids();
  ZWitness w = assemble(a1, a2, *g, *sigma);
  if (!verify_witness(a1, a2, w)) throw NonWitnessableIsoMatroids();
  return w;
}

}  // namespace zonotopal
