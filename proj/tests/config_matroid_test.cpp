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

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "zonotopal/corpus.h"
#include "zonotopal/errors.h"

namespace zonotopal {
namespace {

const QMatrix kTriangleA{{-1, 0, 1, 1}, {0, -1, -1, -1}};

TuttePoly poly(std::initializer_list<std::tuple<int, int, int>> terms) {
  TuttePoly t;
  for (auto [i, j, c] : terms) t.add(i, j, c);
  return t;
}

// Corank-nullity sum computed from scratch with one rank call per subset.
TuttePoly subset_expansion_oracle(const VectorConfig& c) {
  std::map<std::pair<int, int>, long> counts;
  const std::size_t m = c.m();
  for (ColumnSet s = 0; s < (ColumnSet{1} << m); ++s) {
    std::vector<std::size_t> cols;
    for (std::size_t i = 0; i < m; ++i)
      if (s >> i & 1) cols.push_back(i);
    const int r = static_cast<int>(rank(c.matrix().select_columns(cols)));
    ++counts[{static_cast<int>(c.n()) - r, static_cast<int>(cols.size()) - r}];
  }
  // (x-1)^a (y-1)^b expanded.
  TuttePoly t;
  for (const auto& [ab, count] : counts) {
    const auto [a, b] = ab;
    for (int i = 0; i <= a; ++i)
      for (int j = 0; j <= b; ++j) {
        Integer ca, cb;
        mpz_bin_uiui(ca.get_mpz_t(), a, i);
        mpz_bin_uiui(cb.get_mpz_t(), b, j);
        const int sign = ((a - i) + (b - j)) % 2 ? -1 : 1;
        t.add(i, j, Integer(sign * count) * ca * cb);
      }
  }
  return t;
}

// Every square minor in {-1, 0, 1}, by enumeration.
bool tu_oracle(const QMatrix& m) {
  const std::size_t r = m.rows(), c = m.cols();
  for (std::uint32_t rs = 1; rs < (1u << r); ++rs)
    for (std::uint32_t cs = 1; cs < (1u << c); ++cs) {
      if (__builtin_popcount(rs) != __builtin_popcount(cs)) continue;
      std::vector<std::size_t> rows, cols;
      for (std::size_t i = 0; i < r; ++i)
        if (rs >> i & 1) rows.push_back(i);
      for (std::size_t j = 0; j < c; ++j)
        if (cs >> j & 1) cols.push_back(j);
      const Rational d = det(m.select_rows(rows).select_columns(cols));
      if (d != 0 && d != 1 && d != -1) return false;
    }
  return true;
}

TEST(VectorConfig, Construction) {
  const VectorConfig c(kTriangleA);
  EXPECT_EQ(c.n(), 2u);
  EXPECT_EQ(c.m(), 4u);
  EXPECT_EQ(VectorConfig(QMatrix{{1}}).m(), 1u);
  try {
    VectorConfig bad(QMatrix(2, 2));
    FAIL();
  } catch (const RankDeficient& e) {
    EXPECT_EQ(e.rank(), 0u);
  }
}

TEST(SubsetRank, Examples) {
  const VectorConfig c(kTriangleA);
  EXPECT_EQ(subset_rank(c, std::vector<std::size_t>{0, 1}), 2u);
  EXPECT_EQ(subset_rank(c, std::vector<std::size_t>{}), 0u);
  EXPECT_EQ(subset_rank(c, std::vector<std::size_t>{2, 3}), 1u);
  EXPECT_EQ(subset_rank(c, ColumnSet{0b1100}), 1u);
}

TEST(Tutte, Examples) {
  EXPECT_EQ(tutte(VectorConfig(kTriangleA)), poly({{1, 0, 1}, {0, 1, 1}, {2, 0, 1}, {1, 1, 1}, {0, 2, 1}}));
  EXPECT_EQ(tutte(VectorConfig(kTriangleA)).to_string(), "x + y + x^2 + x*y + y^2");
  EXPECT_EQ(tutte(VectorConfig(QMatrix{{1}})), poly({{1, 0, 1}}));
  const VectorConfig loop(QMatrix{{1, 0}});
  EXPECT_EQ(tutte(loop), poly({{1, 1, 1}}));
  EXPECT_EQ(tutte(loop), subset_expansion_oracle(loop));
}

TEST(Tutte, Evaluations) {
  const TuttePoly t = tutte(VectorConfig(kTriangleA));
  EXPECT_EQ(tutte_eval(t, 2, 1), 10);
  EXPECT_EQ(tutte_eval(t, 1, 1), 5);
  EXPECT_EQ(tutte_eval(t, 2, 2), 16);
}

TEST(Tutte, GuardOnColumnCount) {
  EXPECT_THROW(tutte(VectorConfig(kTriangleA), 3), GuardExceeded);
  EXPECT_THROW(tutte_deletion_contraction(VectorConfig(kTriangleA), 3), GuardExceeded);
}

TEST(Tutte, RandomAgreement) {
  corpus::Rng rng(5);
  for (int t = 0; t < 150; ++t) {
    const VectorConfig c(corpus::random_matrix(rng));
    const TuttePoly tp = tutte(c);
    EXPECT_EQ(tp, subset_expansion_oracle(c));
    EXPECT_EQ(tp, tutte_deletion_contraction(c));
    EXPECT_EQ(tutte_eval(tp, 2, 2), Rational(Integer(1) << c.m()));
  }
}

TEST(Tutte, CountsBasesAndIndependentSets) {
  corpus::Rng rng(6);
  for (int t = 0; t < 100; ++t) {
    const VectorConfig c(corpus::random_matrix(rng));
    std::size_t bases = 0, independent = 0;
    for (ColumnSet s = 0; s < (ColumnSet{1} << c.m()); ++s) {
      const std::size_t k = __builtin_popcount(s);
      if (subset_rank(c, s) != k) continue;
      ++independent;
      if (k == c.n()) ++bases;
    }
    const TuttePoly tp = tutte(c);
    EXPECT_EQ(tutte_eval(tp, 1, 1), Rational(static_cast<long>(bases)));
    EXPECT_EQ(tutte_eval(tp, 2, 1), Rational(static_cast<long>(independent)));
  }
}

TEST(RankTable, MatchesDirectRank) {
  corpus::Rng rng(7);
  for (int t = 0; t < 50; ++t) {
    const VectorConfig c(corpus::random_matrix(rng));
    const auto table = subset_rank_table(c);
    ASSERT_EQ(table.size(), std::size_t{1} << c.m());
    for (ColumnSet s = 0; s < table.size(); ++s) EXPECT_EQ(table[s], subset_rank(c, s));
  }
}

TEST(TotallyUnimodular, Examples) {
  EXPECT_TRUE(is_totally_unimodular(kTriangleA));
  EXPECT_FALSE(is_totally_unimodular(QMatrix{{1, 2}}));
  const QMatrix m{{1, 1}, {-1, 1}};
  EXPECT_FALSE(tu_oracle(m));
  EXPECT_FALSE(is_totally_unimodular(m));
}

TEST(TotallyUnimodular, RandomAgreement) {
  corpus::Rng rng(8);
  std::uniform_int_distribution<int> entry(-1, 1);
  for (int t = 0; t < 200; ++t) {
    QMatrix m(1 + t % 3, 1 + t % 5);
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = entry(rng);
    EXPECT_EQ(is_totally_unimodular(m), tu_oracle(m));
  }
}

TEST(Bridges, Examples) {
  EXPECT_TRUE(bridge_columns(VectorConfig(kTriangleA)).empty());
  EXPECT_EQ(bridge_columns(VectorConfig(QMatrix{{1}})), std::vector<std::size_t>{0});
  EXPECT_EQ(bridge_columns(VectorConfig(QMatrix{{1, 0, 1}, {0, 1, 0}})), std::vector<std::size_t>{1});
}

TEST(CentralReduce, Examples) {
  EXPECT_EQ(central_reduce(kTriangleA).reduced, kTriangleA);
  const auto single = central_reduce(QMatrix{{1}});
  EXPECT_EQ(single.reduced.rows(), 0u);
  EXPECT_EQ(single.reduced.cols(), 0u);
  const auto red = central_reduce(QMatrix{{1, 0, 0}, {0, 1, 1}});
  EXPECT_EQ(red.reduced, (QMatrix{{1, 1}}));
  EXPECT_EQ(red.removed_columns, std::vector<std::size_t>{0});
  EXPECT_EQ(red.kept_rows, std::vector<std::size_t>{1});
  EXPECT_EQ(red.dropped_rows, std::vector<std::size_t>{0});
}

TEST(CentralReduce, PlantedBridgesAreRemoved) {
  corpus::Rng rng(9);
  for (int t = 0; t < 60; ++t) {
    const auto p = corpus::planted_bridges(rng, 1 + t % 2, 3 + t % 2, 1 + t % 3);
    const auto red = central_reduce(p.matrix);
    EXPECT_EQ(red.removed_columns, p.bridges);
    EXPECT_EQ(red.removed_columns, bridge_columns(VectorConfig(p.matrix)));
    EXPECT_TRUE(bridge_columns(VectorConfig(red.reduced)).empty());
    EXPECT_EQ(rank(red.reduced), red.reduced.rows());
  }
}

TEST(MatroidIsomorphic, Examples) {
  const VectorConfig c(kTriangleA);
  const std::vector<std::size_t> perm{2, 0, 3, 1};
  const VectorConfig shuffled(kTriangleA.select_columns(perm));
  const auto sigma = matroid_isomorphic(c, shuffled);
  ASSERT_TRUE(sigma.has_value());
  EXPECT_TRUE(is_matroid_isomorphism(c, shuffled, *sigma));

  EXPECT_FALSE(matroid_isomorphic(VectorConfig(QMatrix{{1, 0, 1}, {0, 1, 1}}),
                                  VectorConfig(QMatrix{{1, 1, 0}, {0, 0, 1}}))
                   .has_value());
  const VectorConfig u1(QMatrix{{1, 0, 1, 1}, {0, 1, 1, 2}});
  const VectorConfig u2(QMatrix{{1, 0, 1, 1}, {0, 1, 1, 3}});
  const auto s = matroid_isomorphic(u1, u2);
  ASSERT_TRUE(s.has_value());
  EXPECT_TRUE(is_matroid_isomorphism(u1, u2, *s));
}

TEST(MatroidIsomorphic, RandomColumnShuffles) {
  corpus::Rng rng(10);
  for (int t = 0; t < 100; ++t) {
    const QMatrix a = corpus::random_matrix(rng);
    std::vector<std::size_t> perm(a.cols());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const VectorConfig c1(a), c2(a.select_columns(perm));
    const auto sigma = matroid_isomorphic(c1, c2);
    ASSERT_TRUE(sigma.has_value());
    EXPECT_TRUE(is_matroid_isomorphism(c1, c2, *sigma));
    EXPECT_EQ(tutte(c1), tutte(c2));
  }
}

}  // namespace
}  // namespace zonotopal
