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

#include <gtest/gtest.h>

#include <random>

#include "zonotopal/corpus.h"
#include "zonotopal/errors.h"

namespace zonotopal {
namespace {

const QMatrix kTriangleA{{-1, 0, 1, 1}, {0, -1, -1, -1}};

// Cofactor expansion along the first row.
Rational cofactor_det(const QMatrix& m) {
  if (m.rows() == 0) return 1;
  Rational total = 0;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    std::vector<std::size_t> rows, cols;
    for (std::size_t i = 1; i < m.rows(); ++i) rows.push_back(i);
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (c != j) cols.push_back(c);
    const Rational minor = cofactor_det(m.select_rows(rows).select_columns(cols));
    total += (j % 2 ? -1 : 1) * m(0, j) * minor;
  }
  return total;
}

TEST(Rank, Examples) {
  EXPECT_EQ(rank(kTriangleA), 2u);
  EXPECT_EQ(rank(QMatrix(3, 3)), 0u);
  EXPECT_EQ(rank(QMatrix::identity(4)), 4u);
}

TEST(Nullspace, Examples) {
  EXPECT_EQ(nullspace(QMatrix{{1, 1}}), (std::vector<Vector>{{1, -1}}));
  EXPECT_TRUE(nullspace(QMatrix::identity(3)).empty());
  EXPECT_EQ(nullspace(QMatrix{{-1, 0}}), (std::vector<Vector>{{0, 1}}));
}

TEST(Det, Examples) {
  EXPECT_EQ(det(QMatrix{{-1, 0}, {0, -1}}), 1);
  const QMatrix cols13{{-1, 1}, {0, -1}};
  EXPECT_EQ(det(cols13), cofactor_det(cols13));
  EXPECT_EQ(det(cols13), 1);
  EXPECT_EQ(det(QMatrix{{1, 2}, {2, 4}}), 0);
  EXPECT_THROW(det(kTriangleA), NonSquare);
}

TEST(Inverse, ProducesIdentity) {
  const QMatrix m{{2, 1}, {Rational(1, 2), 3}};
  const auto inv = inverse(m);
  ASSERT_TRUE(inv.has_value());
  EXPECT_EQ(m * *inv, QMatrix::identity(2));
  EXPECT_FALSE(inverse(QMatrix{{1, 2}, {2, 4}}).has_value());
}

TEST(QMatrix, SelectAndTranspose) {
  const std::vector<std::size_t> cols{2, 0};
  EXPECT_EQ(kTriangleA.select_columns(cols), (QMatrix{{1, -1}, {-1, 0}}));
  EXPECT_EQ(kTriangleA.transpose().transpose(), kTriangleA);
  const std::vector<std::size_t> bad{7};
  EXPECT_THROW(kTriangleA.select_columns(bad), IndexOutOfRange);
}

class RandomMatrices : public ::testing::Test {
 protected:
  corpus::Rng rng{17};
};

TEST_F(RandomMatrices, RankOfTransposeAgrees) {
  for (int t = 0; t < 300; ++t) {
    QMatrix m(1 + t % 4, 1 + t % 5);
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j)
        m(i, j) = t % 3 ? corpus::random_entry(rng) : Rational(t % 2);
    if (t % 5 == 0 && m.rows() > 1)
      for (std::size_t j = 0; j < m.cols(); ++j) m(1, j) = 2 * m(0, j);
    EXPECT_EQ(rank(m), rank(m.transpose()));
  }
}

TEST_F(RandomMatrices, DetMatchesCofactorsAndRank) {
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = 1 + t % 4;
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = corpus::random_entry(rng);
    const Rational d = det(m);
    EXPECT_EQ(d, cofactor_det(m));
    EXPECT_EQ(d != 0, rank(m) == n);
  }
}

TEST_F(RandomMatrices, NullspaceContract) {
  for (int t = 0; t < 300; ++t) {
    QMatrix m(1 + t % 3, 1 + t % 6);
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = corpus::random_entry(rng);
    const auto basis = nullspace(m);
    EXPECT_EQ(basis.size() + rank(m), m.cols());
    for (const auto& v : basis) {
      EXPECT_TRUE(is_zero(m * v));
      EXPECT_FALSE(is_zero(v));
      EXPECT_EQ(to_rational(canonical_primitive(v)), v);
    }
    if (!basis.empty()) EXPECT_EQ(rank(QMatrix::from_rows(basis)), basis.size());
  }
}

TEST(IntegerRank, MatchesRationalRank) {
  EXPECT_EQ(integer_rank({{2, 4}, {1, 2}, {0, 0}}), 1u);
  EXPECT_EQ(integer_rank({{1, 0}, {0, 3}}), 2u);
}

}  // namespace
}  // namespace zonotopal
