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

#include "zonotopal/squarefree.h"

#include <gtest/gtest.h>

#include "zonotopal/config_matroid.h"
#include "zonotopal/corpus.h"
#include "zonotopal/errors.h"
#include "zonotopal/power_ideal.h"

namespace zonotopal {
namespace {

const QMatrix kTriangleA{{-1, 0, 1, 1}, {0, -1, -1, -1}};

SquareFreeElem linear(const std::vector<Rational>& coeffs) {
  SquareFreeElem x(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) x.add_term(1u << i, coeffs[i]);
  return x;
}

TEST(Multiply, Examples) {
  const auto p1 = SquareFreeElem::generator(2, 0);
  const auto p2 = SquareFreeElem::generator(2, 1);
  SquareFreeElem p12(2);
  p12.add_term(0b11, 1);
  EXPECT_EQ(multiply(p1, p2), p12);
  EXPECT_TRUE(multiply(p1, p1).is_zero());
  SquareFreeElem sum = p1;
  sum += p2;
  EXPECT_EQ(multiply(sum, sum), p12.scaled(2));
}

TEST(GeneratorImages, Examples) {
  const auto xs = generator_images(kTriangleA);
  ASSERT_EQ(xs.size(), 2u);
  EXPECT_EQ(xs[0], linear({-1, 0, 1, 1}));
  EXPECT_EQ(xs[1], linear({0, -1, -1, -1}));
  const auto id = generator_images(QMatrix::identity(2));
  EXPECT_EQ(id[0], SquareFreeElem::generator(2, 0));
  EXPECT_EQ(id[1], SquareFreeElem::generator(2, 1));
  EXPECT_EQ(generator_images(QMatrix{{1, 1}})[0], linear({1, 1}));
}

TEST(Length, Examples) {
  EXPECT_EQ(length(generator_images(kTriangleA)[0]), 3u);
  EXPECT_EQ(length(SquareFreeElem::generator(3, 1)), 1u);
  EXPECT_EQ(length(SquareFreeElem(3)), 0u);
  EXPECT_THROW(length(SquareFreeElem::constant(2, 1)), NotNilpotent);
}

TEST(LinearLength, Examples) {
  EXPECT_EQ(linear_length(kTriangleA, Vector{1, 0}), 3u);
  EXPECT_EQ(linear_length(kTriangleA, Vector{1, 1}), 2u);
  EXPECT_EQ(linear_length(kTriangleA, Vector{0, 0}), 0u);
}

TEST(LinearLength, MatchesPowering) {
  corpus::Rng rng(41);
  for (int t = 0; t < 300; ++t) {
    const QMatrix a = corpus::random_matrix(rng);
    Vector b(a.rows());
    for (auto& x : b) x = corpus::random_entry(rng);
    std::vector<Rational> coeffs(a.cols(), 0);
    for (std::size_t j = 0; j < a.cols(); ++j) coeffs[j] = dot(b, a.column(j));
    EXPECT_EQ(length(linear(coeffs)), linear_length(a, b));
  }
}

TEST(SubalgebraHilbert, Examples) {
  EXPECT_EQ(subalgebra_hilbert(kTriangleA).coeffs, (std::vector<Integer>{1, 2, 3, 3, 1}));
  EXPECT_EQ(subalgebra_hilbert(QMatrix::identity(3)).coeffs, (std::vector<Integer>{1, 3, 3, 1}));
  EXPECT_EQ(subalgebra_hilbert(QMatrix::identity(4)).coeffs, (std::vector<Integer>{1, 4, 6, 4, 1}));
  EXPECT_EQ(subalgebra_hilbert(QMatrix{{1}}).coeffs, (std::vector<Integer>{1, 1}));
}

TEST(SubalgebraHilbert, MatchesExternalSeries) {
  corpus::Rng rng(42);
  for (int t = 0; t < 80; ++t) {
    const QMatrix a = corpus::random_matrix(rng);
    EXPECT_EQ(subalgebra_hilbert(a), zonotopal_hilbert_series(VectorConfig(a), 1));
  }
}

TEST(LengthOracle, Queries) {
  const LengthOracle oracle = make_length_oracle(kTriangleA);
  EXPECT_EQ(oracle.generator_count(), 2u);
  EXPECT_EQ(oracle.length(Vector{1, 0}), 3u);
  EXPECT_EQ(oracle.queries(), 1u);
  EXPECT_EQ(oracle.critical_ratios(0, 1), (std::set<Rational>{-1}));
  EXPECT_TRUE(make_length_oracle(QMatrix::identity(2)).critical_ratios(0, 1).empty());
}

TEST(LengthOracle, Preconditions) {
  EXPECT_THROW(make_length_oracle(QMatrix{{1, 0}, {0, 0}}), ZeroColumn);
  EXPECT_THROW(make_length_oracle(QMatrix{{1, 2}, {2, 4}}), RankDeficient);
  QMatrix wide(1, 17);
  for (std::size_t j = 0; j < 17; ++j) wide(0, j) = 1;
  EXPECT_THROW(make_length_oracle(wide), GuardExceeded);
}

}  // namespace
}  // namespace zonotopal
