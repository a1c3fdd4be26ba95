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

#ifndef ZONOTOPAL_POWER_IDEAL_H_
#define ZONOTOPAL_POWER_IDEAL_H_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "zonotopal/config_matroid.h"
#include "zonotopal/rational.h"
#include "zonotopal/zonotope.h"

namespace zonotopal {

// Generator (normal . x)^exponent of a power ideal.
struct PowerGenerator {
  IntVector normal;
  int exponent;
};

// The ideal I^(k) of a zonotope: one generator per unoriented facet class,
// exponent m(eta) + k.
struct IdealPresentation {
  std::size_t n = 0;  // variables
  std::size_t m = 0;  // columns of the underlying matrix; degree bound
  int k = 0;
  std::vector<PowerGenerator> generators;
  bool unit_ideal = false;  // some exponent <= 0
};

// Coefficients of a polynomial in q, index = degree, trailing zeros trimmed.
// The zero ring has no coefficients.
struct GradedSeries {
  std::vector<Integer> coeffs;

  Integer total() const;
  std::string to_string() const;  // "1 + 2q + 3q^2"
  friend bool operator==(const GradedSeries&, const GradedSeries&) = default;
};

IdealPresentation ideal_generators(const Zonotope& z, int k);

struct HilbertLimits {
  std::size_t max_variables = 8;
  std::size_t max_monomials = 5000;  // per degree slice
};

// Graded dimensions of Q[x_1..x_n] / I from Macaulay-matrix ranks, one
// degree slice per task. Throws GuardExceeded, DegreeBoundViolated.
GradedSeries hilbert_series(const IdealPresentation& p, HilbertLimits limits = {});

// Dimension of the degree-d slice of the quotient.
Integer hilbert_function(const IdealPresentation& p, std::size_t d);

Integer total_dimension(const IdealPresentation& p, HilbertLimits limits = {});

// q^(m-n) T(x_k, 1/q) with x_1 = 1+q, x_0 = 1, x_{-1} = 0. Absent if the
// expansion has a negative power of q. k must be -1, 0 or 1.
std::optional<GradedSeries> tutte_hilbert_prediction(const TuttePoly& t, std::size_t m,
                                                     std::size_t n, int k);

// Compares hilbert_series(I^(k)) with the Tutte prediction exactly.
bool verify_tutte_identity(const VectorConfig& c, int k);

// Convenience: matrix -> zonotope -> ideal -> series. Handles n = 0.
GradedSeries zonotopal_hilbert_series(const VectorConfig& c, int k);

}  // namespace zonotopal

#endif  // ZONOTOPAL_POWER_IDEAL_H_
