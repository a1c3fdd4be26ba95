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

#ifndef ZONOTOPAL_SQUAREFREE_H_
#define ZONOTOPAL_SQUAREFREE_H_

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "zonotopal/power_ideal.h"
#include "zonotopal/qmatrix.h"
#include "zonotopal/rational.h"

namespace zonotopal {

// Element of Phi_m = Q[phi_1..phi_m] / (phi_i^2). A term is a squarefree
// monomial phi_S keyed by the bitmask of S.
class SquareFreeElem {
 public:
  using Mask = std::uint32_t;
  static constexpr std::size_t kMaxGround = 32;

  explicit SquareFreeElem(std::size_t m);
  static SquareFreeElem generator(std::size_t m, std::size_t i);
  static SquareFreeElem constant(std::size_t m, const Rational& c);

  std::size_t ground_size() const { return m_; }
  const std::map<Mask, Rational>& terms() const { return terms_; }
  Rational coeff(Mask s) const;
  bool is_zero() const { return terms_.empty(); }

  void add_term(Mask s, const Rational& c);
  SquareFreeElem& operator+=(const SquareFreeElem& other);
  SquareFreeElem scaled(const Rational& c) const;

  std::string to_string() const;

  friend bool operator==(const SquareFreeElem&, const SquareFreeElem&) = default;

 private:
  std::size_t m_;
  std::map<Mask, Rational> terms_;
};

// Throws SizeMismatch when the ground sizes differ.
SquareFreeElem multiply(const SquareFreeElem& a, const SquareFreeElem& b);

// X_i = t_i . (phi_1..phi_m) for each row t_i. Throws RankDeficient.
std::vector<SquareFreeElem> generator_images(const QMatrix& a);

// Largest l with a^l != 0, by repeated multiplication. Throws NotNilpotent.
std::size_t length(const SquareFreeElem& a);

// Number of nonzero entries of b^T A.
std::size_t linear_length(const QMatrix& a, std::span<const Rational> b);

// Graded dimensions of the subalgebra generated by the X_i.
GradedSeries subalgebra_hilbert(const QMatrix& a, std::size_t max_m = 16);

// Black-box access to the external algebra through its distinguished
// generators x_1..x_n. The backing matrix is not exposed.
class LengthOracle {
 public:
  LengthOracle(const LengthOracle& other);

  std::size_t generator_count() const { return generators_.size(); }

  // length(sum_i b_i x_i), computed by powering in Phi_m.
  std::size_t length(std::span<const Rational> b) const;

  // The finite set of s != 0 at which t -> length(x_i - t x_j) drops.
  std::set<Rational> critical_ratios(std::size_t i, std::size_t j) const;

  std::uint64_t queries() const { return queries_.load(); }

 private:
  friend LengthOracle make_length_oracle(const QMatrix& a);
  LengthOracle(QMatrix a, std::vector<SquareFreeElem> generators);

  QMatrix a_;
  std::vector<SquareFreeElem> generators_;
  mutable std::atomic<std::uint64_t> queries_{0};
};

// Throws RankDeficient, ZeroColumn, GuardExceeded (m > 16).
LengthOracle make_length_oracle(const QMatrix& a);

}  // namespace zonotopal

#endif  // ZONOTOPAL_SQUAREFREE_H_
