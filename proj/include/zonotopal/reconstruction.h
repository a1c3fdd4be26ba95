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

#ifndef ZONOTOPAL_RECONSTRUCTION_H_
#define ZONOTOPAL_RECONSTRUCTION_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "zonotopal/rational.h"
#include "zonotopal/squarefree.h"

namespace zonotopal {

// Point of P^(n-1): primitive integer coordinates, first nonzero positive.
class ProjPoint {
 public:
  // Throws SizeMismatch on the zero vector.
  explicit ProjPoint(std::span<const Rational> coords);
  explicit ProjPoint(std::span<const Integer> coords);

  const IntVector& coords() const { return coords_; }
  std::size_t dim() const { return coords_.size(); }
  std::vector<std::size_t> support() const;
  std::string to_string() const;  // "(1:-1)"

  friend bool operator==(const ProjPoint& a, const ProjPoint& b) {
    return a.coords_ == b.coords_;
  }
  friend bool operator<(const ProjPoint& a, const ProjPoint& b) {
    return a.coords_ < b.coords_;
  }

 private:
  IntVector coords_;
};

using ProjMultiset = std::map<ProjPoint, std::size_t>;

std::string to_string(const ProjMultiset& s);

struct CandidateSet {
  std::set<Rational> ratios;
  std::vector<ProjPoint> candidates;
};

// Union of the oracle's critical ratios over ordered pairs i != j.
std::set<Rational> ratio_set(const LengthOracle& oracle);

// Every projective point whose least support coordinate is 1 and whose other
// support coordinates lie in S u {1}. With `prune`, points with a pairwise
// coordinate ratio outside S u {1} are dropped. Throws GuardExceeded.
CandidateSet candidate_set(const std::set<Rational>& ratios, std::size_t n,
                           bool prune = true, std::uint64_t max_candidates = 100'000);

// p >= q: q arises from p by zeroing coordinates and rescaling.
bool dominates(const ProjPoint& p, const ProjPoint& q);

struct ReconstructOptions {
  std::size_t trials = 5;
  std::uint64_t seed = 0;
  long long range = 1'000'000;  // b, c drawn from [-range, range]
};

// Number of columns (with multiplicity) dominating s, from two generic
// length queries. `stream` selects the random stream under opts.seed.
std::size_t cumulative_multiplicity(const LengthOracle& oracle, const ProjPoint& s,
                                    const ReconstructOptions& opts = {},
                                    std::uint64_t stream = 0);

struct Reconstruction {
  ProjMultiset columns;
  CandidateSet candidates;
  std::vector<std::size_t> cumulative;  // per candidate
};

// Recovers the projective column multiset from length queries. Candidates
// are queried in parallel, each on its own random stream.
// Throws NegativeMultiplicity.
Reconstruction reconstruct(const LengthOracle& oracle, const ReconstructOptions& opts = {});

// Inverts cumulative counts over the dominance order, largest supports
// first. Throws NegativeMultiplicity.
ProjMultiset invert_cumulative(const std::vector<ProjPoint>& candidates,
                               const std::vector<std::size_t>& cumulative);

}  // namespace zonotopal

#endif  // ZONOTOPAL_RECONSTRUCTION_H_
