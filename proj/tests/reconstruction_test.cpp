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

#include "zonotopal/reconstruction.h"

#include <gtest/gtest.h>

#include "zonotopal/corpus.h"
#include "zonotopal/errors.h"
#include "zonotopal/reference.h"
#include "zonotopal/zequiv.h"

namespace zonotopal {
namespace {

const QMatrix kTriangleA{{-1, 0, 1, 1}, {0, -1, -1, -1}};

ProjPoint pt(std::initializer_list<long> c) {
  IntVector v;
  for (long x : c) v.emplace_back(x);
  return ProjPoint(std::span<const Integer>(v));
}

TEST(ProjPoint, Canonical) {
  const Vector v{Rational(-2, 3), Rational(2, 3)};
  EXPECT_EQ(ProjPoint(v), pt({1, -1}));
  EXPECT_EQ(pt({1, -1}).to_string(), "(1:-1)");
  EXPECT_EQ(pt({0, 2, 4}).support(), (std::vector<std::size_t>{1, 2}));
  EXPECT_THROW(pt({0, 0}), SizeMismatch);
}

TEST(RatioSet, Examples) {
  EXPECT_EQ(ratio_set(make_length_oracle(kTriangleA)), (std::set<Rational>{-1}));
  EXPECT_TRUE(ratio_set(make_length_oracle(QMatrix::identity(2))).empty());
  EXPECT_EQ(ratio_set(make_length_oracle(QMatrix{{1, 1}, {1, 2}})),
            (std::set<Rational>{1, 2, Rational(1, 2)}));
}

TEST(CandidateSet, Examples) {
  auto sorted = [](std::vector<ProjPoint> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  EXPECT_EQ(sorted(candidate_set({-1}, 2).candidates),
            sorted({pt({1, 0}), pt({0, 1}), pt({1, 1}), pt({1, -1})}));
  EXPECT_EQ(sorted(candidate_set({}, 2).candidates), sorted({pt({1, 0}), pt({0, 1}), pt({1, 1})}));
  EXPECT_EQ(candidate_set({2}, 1).candidates, std::vector<ProjPoint>{pt({1})});
  EXPECT_THROW(candidate_set({2, 3, 5, 7, 11, 13}, 3, false, 10), GuardExceeded);
}

TEST(Dominates, Examples) {
  EXPECT_TRUE(dominates(pt({1, 1, -1}), pt({1, 0, -1})));
  EXPECT_TRUE(dominates(pt({1, 1}), pt({1, 0})));
  EXPECT_FALSE(dominates(pt({1, 0}), pt({1, 1})));
  EXPECT_FALSE(dominates(pt({1, 2}), pt({1, 1})));
  for (const auto& p : {pt({1, 0}), pt({1, -1}), pt({0, 1, 3})}) EXPECT_TRUE(dominates(p, p));
}

TEST(CumulativeMultiplicity, Examples) {
  const LengthOracle oracle = make_length_oracle(kTriangleA);
  EXPECT_EQ(cumulative_multiplicity(oracle, pt({1, -1})), 2u);
  EXPECT_EQ(cumulative_multiplicity(oracle, pt({1, 0})), 3u);
  EXPECT_EQ(cumulative_multiplicity(oracle, pt({0, 1})), 3u);
}

TEST(CumulativeMultiplicity, CountsDominatingColumns) {
  corpus::Rng rng(51);
  corpus::MatrixShape shape;
  shape.allow_zero_columns = false;
  for (int t = 0; t < 40; ++t) {
    const QMatrix a = corpus::random_matrix(rng, shape);
    const LengthOracle oracle = make_length_oracle(a);
    const auto cands = candidate_set(ratio_set(oracle), a.rows()).candidates;
    for (std::size_t i = 0; i < cands.size(); ++i) {
      std::size_t expected = 0;
      for (std::size_t j = 0; j < a.cols(); ++j)
        if (dominates(ProjPoint(a.column(j)), cands[i])) ++expected;
      EXPECT_EQ(cumulative_multiplicity(oracle, cands[i], {}, i), expected);
    }
  }
}

TEST(Reconstruct, Examples) {
  ProjMultiset triangle{{pt({1, 0}), 1}, {pt({0, 1}), 1}, {pt({1, -1}), 2}};
  EXPECT_EQ(reconstruct(make_length_oracle(kTriangleA)).columns, triangle);
  ProjMultiset id{{pt({1, 0, 0}), 1}, {pt({0, 1, 0}), 1}, {pt({0, 0, 1}), 1}};
  EXPECT_EQ(reconstruct(make_length_oracle(QMatrix::identity(3))).columns, id);
  ProjMultiset two{{pt({1, 1}), 1}, {pt({1, 2}), 1}};
  EXPECT_EQ(reconstruct(make_length_oracle(QMatrix{{1, 1}, {1, 2}})).columns, two);
}

TEST(Reconstruct, RoundTripAndSerialAgreement) {
  corpus::Rng rng(52);
  corpus::MatrixShape shape;
  shape.allow_zero_columns = false;
  for (int t = 0; t < 60; ++t) {
    const QMatrix a = corpus::random_matrix(rng, shape);
    const LengthOracle oracle = make_length_oracle(a);
    ReconstructOptions opts;
    opts.seed = static_cast<std::uint64_t>(t);
    const Reconstruction par = reconstruct(oracle, opts);
    const Reconstruction ser = reference::reconstruct(oracle, opts);
    EXPECT_EQ(par.columns, proj_classes(a).classes);
    EXPECT_EQ(par.columns, ser.columns);
    EXPECT_EQ(par.cumulative, ser.cumulative);
  }
}

TEST(InvertCumulative, RejectsInconsistentCounts) {
  const std::vector<ProjPoint> cands{pt({1, 0}), pt({0, 1}), pt({1, 1})};
  EXPECT_EQ(invert_cumulative(cands, {2, 1, 1}),
            (ProjMultiset{{pt({1, 0}), 1}, {pt({1, 1}), 1}}));
  EXPECT_THROW(invert_cumulative(cands, {0, 1, 1}), NegativeMultiplicity);
}

}  // namespace
}  // namespace zonotopal
