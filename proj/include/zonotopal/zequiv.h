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

#ifndef ZONOTOPAL_ZEQUIV_H_
#define ZONOTOPAL_ZEQUIV_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "zonotopal/qmatrix.h"
#include "zonotopal/reconstruction.h"

namespace zonotopal {

// A2 = g * A1 * P * diag(scales), where P moves column perm[j] of A1 to
// position j: column j of A2 equals scales[j] * g * (column perm[j] of A1).
struct ZWitness {
  QMatrix g;
  std::vector<std::size_t> perm;
  std::vector<Rational> scales;
};

enum class Verdict { kExact, kProbabilistic };

const char* to_string(Verdict v);

struct ZEquivResult {
  std::optional<ZWitness> witness;
  // kProbabilistic only when a negative answer relied on random sampling
  // of a determinant.
  Verdict verdict = Verdict::kExact;
};

struct ProjClasses {
  ProjMultiset classes;
  std::size_t zero_columns = 0;
};

ProjClasses proj_classes(const QMatrix& a);

struct ZEquivOptions {
  std::size_t max_m = 12;
  std::uint64_t grid_limit = 100'000;  // (n+1)^d grid points
  std::size_t random_samples = 50;
  std::uint64_t seed = 0;
};

// Decides z-equivalence of two full-row-rank matrices. Throws
// GuardExceeded, RankDeficient.
ZEquivResult z_equivalent(const QMatrix& a1, const QMatrix& a2, const ZEquivOptions& opts = {});

bool verify_witness(const QMatrix& a1, const QMatrix& a2, const ZWitness& w);

// Witness for A3 ~ A1 given A1 ~ A2 (w12) and A2 ~ A3 (w23).
ZWitness compose(const ZWitness& w12, const ZWitness& w23);
// Witness for A1 ~ A2 given A2 ~ A1.
ZWitness invert(const ZWitness& w);

// For totally unimodular inputs, matroid isomorphism decides z-equivalence:
// the column matching comes from the isomorphism and only g is searched.
// Throws NotUnimodular, GuardExceeded, NonWitnessableIsoMatroids.
std::optional<ZWitness> unimodular_equiv_via_matroid(const QMatrix& a1, const QMatrix& a2,
                                                     const ZEquivOptions& opts = {});

}  // namespace zonotopal

#endif  // ZONOTOPAL_ZEQUIV_H_
