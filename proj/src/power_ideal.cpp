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

#include "zonotopal/power_ideal.h"

#include <map>
#include <stdexcept>

#include "combinatorics.h"
#include "zonotopal/errors.h"

namespace zonotopal {

using detail::binomial;

Integer GradedSeries::total() const {
  Integer t = 0;
  for (const auto& c : coeffs) t += c;
  return t;
}

std::string GradedSeries::to_string() const {
  std::string out;
  for (std::size_t d = 0; d < coeffs.size(); ++d) {
    if (coeffs[d] == 0) continue;
    if (!out.empty()) out += " + ";
    if (d == 0 || coeffs[d] != 1) out += coeffs[d].get_str();
    if (d >= 1) out += "q";
    if (d >= 2) out += "^" + std::to_string(d);
  }
  return out.empty() ? "0" : out;
}

IdealPresentation ideal_generators(const Zonotope& z, int k) {
  IdealPresentation p;
  p.n = z.config.n();
  p.m = z.config.m();
  p.k = k;
  for (const auto& f : z.unoriented()) {
    const int e = static_cast<int>(f.multiplicity) + k;
    p.generators.push_back({f.normal, e});
    if (e <= 0) p.unit_ideal = true;
  }
  return p;
}

namespace {

using Exponent = std::vector<int>;

void monomials_rec(std::size_t n, int d, Exponent& cur, std::size_t pos,
                   std::vector<Exponent>& out) {
  if (pos + 1 == n) {
    cur[pos] = d;
    out.push_back(cur);
    return;
  }
  for (int a = d; a >= 0; --a) {
    cur[pos] = a;
    monomials_rec(n, d - a, cur, pos + 1, out);
  }
}

std::vector<Exponent> monomials(std::size_t n, int d) {
  std::vector<Exponent> out;
  if (n == 0) {
    if (d == 0) out.emplace_back();
    return out;
  }
  Exponent cur(n, 0);
  monomials_rec(n, d, cur, 0, out);
  return out;
}

// (eta . x)^e as a list of (exponent, multinomial coefficient * eta^beta).
std::vector<std::pair<Exponent, Integer>> expand_power(const IntVector& eta, int e) {
  std::vector<std::pair<Exponent, Integer>> terms;
  Integer e_fact;
  mpz_fac_ui(e_fact.get_mpz_t(), static_cast<unsigned long>(e));
  for (const auto& beta : monomials(eta.size(), e)) {
    Integer c = e_fact;
    for (std::size_t j = 0; j < eta.size(); ++j) {
      Integer f;
      mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(beta[j]));
      c /= f;
      Integer pw;
      mpz_pow_ui(pw.get_mpz_t(), eta[j].get_mpz_t(), static_cast<unsigned long>(beta[j]));
      c *= pw;
    }
    if (c != 0) terms.emplace_back(beta, c);
  }
  return terms;
}

Integer slice_dimension(const IdealPresentation& p, int d) {
  const auto basis = monomials(p.n, d);
  std::map<Exponent, std::size_t> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], i);
  std::vector<IntVector> rows;
  for (const auto& g : p.generators) {
    if (g.exponent > d) continue;
    const auto power = expand_power(g.normal, g.exponent);
    for (const auto& alpha : monomials(p.n, d - g.exponent)) {
      IntVector row(basis.size());
      for (const auto& [beta, c] : power) {
        Exponent mono = alpha;
        for (std::size_t j = 0; j < p.n; ++j) mono[j] += beta[j];
        row[index.at(mono)] += c;
      }
      rows.push_back(std::move(row));
    }
  }
  const std::size_t r = rows.empty() ? 0 : integer_rank(std::move(rows));
  return Integer(static_cast<unsigned long>(basis.size() - r));
}

void check_limits(const IdealPresentation& p, HilbertLimits limits) {
  if (p.n > limits.max_variables) throw GuardExceeded("hilbert: too many variables");
  if (binomial(p.n + p.m, p.m + 1) > limits.max_monomials)
    throw GuardExceeded("hilbert: degree slices too large");
}

}  // namespace

Integer hilbert_function(const IdealPresentation& p, std::size_t d) {
  if (p.unit_ideal) return 0;
  return slice_dimension(p, static_cast<int>(d));
}

GradedSeries hilbert_series(const IdealPresentation& p, HilbertLimits limits) {
  if (p.unit_ideal) return {};
  if (p.n == 0) return {{Integer(1)}};
  check_limits(p, limits);
  // Every slice up to the degree bound m + 1, each independent.
  const long top = static_cast<long>(p.m) + 1;
  std::vector<Integer> h(top + 1);
#pragma omp parallel for schedule(dynamic)
  for (long d = 0; d <= top; ++d) h[d] = slice_dimension(p, static_cast<int>(d));

  std::size_t first_zero = 0;
  while (first_zero < h.size() && h[first_zero] != 0) ++first_zero;
  if (first_zero == h.size())
    throw DegreeBoundViolated("hilbert function nonzero in degree m + 1");
  for (std::size_t d = first_zero; d < h.size(); ++d)
    if (h[d] != 0) throw DegreeBoundViolated("hilbert function nonzero after vanishing");
  h.resize(first_zero);
  return {std::move(h)};
}

Integer total_dimension(const IdealPresentation& p, HilbertLimits limits) {
  return hilbert_series(p, limits).total();
}

std::optional<GradedSeries> tutte_hilbert_prediction(const TuttePoly& t, std::size_t m,
                                                     std::size_t n, int k) {
  if (k < -1 || k > 1) throw std::invalid_argument("Tutte identity needs k in {-1, 0, 1}");
  std::map<long, Integer> laurent;
  for (const auto& [key, c] : t.coeffs()) {
    const auto [i, j] = key;
    const long base = static_cast<long>(m) - static_cast<long>(n) - j;
    if (k == 1) {
      for (int l = 0; l <= i; ++l) laurent[base + l] += c * binomial(i, l);
    } else if (k == 0) {
      laurent[base] += c;
    } else if (i == 0) {
      laurent[base] += c;
    }
  }
  GradedSeries s;
  for (const auto& [e, c] : laurent) {
    if (c == 0) continue;
    if (e < 0) return std::nullopt;
    if (s.coeffs.size() <= static_cast<std::size_t>(e)) s.coeffs.resize(e + 1);
    s.coeffs[e] = c;
  }
  return s;
}

GradedSeries zonotopal_hilbert_series(const VectorConfig& c, int k) {
  if (c.n() == 0) return {{Integer(1)}};
  return hilbert_series(ideal_generators(facet_data(c), k));
}

bool verify_tutte_identity(const VectorConfig& c, int k) {
  const auto predicted = tutte_hilbert_prediction(tutte(c), c.m(), c.n(), k);
  if (!predicted) return false;
  return *predicted == zonotopal_hilbert_series(c, k);
}

}  // namespace zonotopal
