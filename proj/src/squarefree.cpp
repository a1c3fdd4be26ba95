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

#include <sstream>

#include "zonotopal/errors.h"

namespace zonotopal {

SquareFreeElem::SquareFreeElem(std::size_t m) : m_(m) {
  if (m > kMaxGround) throw GuardExceeded("square-free algebra: ground set too large");
}

SquareFreeElem SquareFreeElem::generator(std::size_t m, std::size_t i) {
  if (i >= m) throw IndexOutOfRange("generator index out of range");
  SquareFreeElem e(m);
  e.add_term(Mask{1} << i, 1);
  return e;
}

SquareFreeElem SquareFreeElem::constant(std::size_t m, const Rational& c) {
  SquareFreeElem e(m);
  e.add_term(0, c);
  return e;
}

Rational SquareFreeElem::coeff(Mask s) const {
  auto it = terms_.find(s);
  return it == terms_.end() ? Rational(0) : it->second;
}

void SquareFreeElem::add_term(Mask s, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(s, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

SquareFreeElem& SquareFreeElem::operator+=(const SquareFreeElem& other) {
  if (other.m_ != m_) throw SizeMismatch("square-free elements over different ground sets");
  for (const auto& [s, c] : other.terms_) add_term(s, c);
  return *this;
}

SquareFreeElem SquareFreeElem::scaled(const Rational& c) const {
  SquareFreeElem out(m_);
  if (c == 0) return out;
  for (const auto& [s, x] : terms_) out.terms_.emplace(s, x * c);
  return out;
}

std::string SquareFreeElem::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [s, c] : terms_) {
    if (!first) out << " + ";
    first = false;
    out << "(" << c.get_str() << ")";
    if (s == 0) continue;
    out << "*phi_{";
    bool comma = false;
    for (std::size_t i = 0; i < m_; ++i) {
      if (!(s >> i & 1u)) continue;
      if (comma) out << ",";
      out << i + 1;
      comma = true;
    }
    out << "}";
  }
  return out.str();
}

SquareFreeElem multiply(const SquareFreeElem& a, const SquareFreeElem& b) {
  if (a.ground_size() != b.ground_size())
    throw SizeMismatch("square-free elements over different ground sets");
  SquareFreeElem out(a.ground_size());
  for (const auto& [s, c] : a.terms())
    for (const auto& [t, d] : b.terms())
      if ((s & t) == 0) out.add_term(s | t, c * d);
  return out;
}

std::vector<SquareFreeElem> generator_images(const QMatrix& a) {
  const std::size_t r = rank(a);
  if (r < a.rows()) throw RankDeficient(r);
  std::vector<SquareFreeElem> xs;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    SquareFreeElem x(a.cols());
    for (std::size_t k = 0; k < a.cols(); ++k) x.add_term(SquareFreeElem::Mask{1} << k, a(i, k));
    xs.push_back(std::move(x));
  }
  return xs;
}

std::size_t length(const SquareFreeElem& a) {
  if (a.coeff(0) != 0) throw NotNilpotent();
  std::size_t l = 0;
  SquareFreeElem power = a;
  while (!power.is_zero()) {
    ++l;
    power = multiply(power, a);
  }
  return l;
}

std::size_t linear_length(const QMatrix& a, std::span<const Rational> b) {
  if (b.size() != a.rows()) throw SizeMismatch("coefficient vector length");
  std::size_t count = 0;
  for (std::size_t k = 0; k < a.cols(); ++k) {
    Rational s = 0;
    for (std::size_t i = 0; i < a.rows(); ++i) s += b[i] * a(i, k);
    if (s != 0) ++count;
  }
  return count;
}

GradedSeries subalgebra_hilbert(const QMatrix& a, std::size_t max_m) {
  if (a.cols() > max_m) throw GuardExceeded("subalgebra: too many columns");
  const auto xs = generator_images(a);
  const std::size_t n = xs.size();
  const std::size_t m = a.cols();
  GradedSeries series;
  series.coeffs.push_back(1);
  // products[i] holds the degree-d products whose largest factor index is i,
  // so extending by X_j with j >= i enumerates multisets once.
  std::vector<std::vector<SquareFreeElem>> products(n);
  for (std::size_t i = 0; i < n; ++i) products[i].push_back(xs[i]);
  for (std::size_t d = 1; d <= m; ++d) {
    // Coordinates over the size-d subsets that occur in some product.
    std::map<SquareFreeElem::Mask, std::size_t> column;
    for (const auto& bucket : products)
      for (const auto& p : bucket)
        for (const auto& [s, c] : p.terms()) column.try_emplace(s, 0);
    std::size_t next = 0;
    for (auto& [s, idx] : column) idx = next++;
    std::vector<IntVector> rows;
    for (const auto& bucket : products)
      for (const auto& p : bucket) {
        Vector dense(column.size());
        for (const auto& [s, c] : p.terms()) dense[column.at(s)] = c;
        rows.push_back(primitive(std::span<const Rational>(dense)));
      }
    const std::size_t h = rows.empty() ? 0 : integer_rank(std::move(rows));
    if (h == 0) break;
    series.coeffs.push_back(static_cast<unsigned long>(h));
    std::vector<std::vector<SquareFreeElem>> grown(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j)
        for (const auto& p : products[i]) {
          auto q = multiply(p, xs[j]);
          if (!q.is_zero()) grown[j].push_back(std::move(q));
        }
    products = std::move(grown);
  }
  return series;
}

LengthOracle::LengthOracle(QMatrix a, std::vector<SquareFreeElem> generators)
    : a_(std::move(a)), generators_(std::move(generators)) {}

LengthOracle::LengthOracle(const LengthOracle& other)
    : a_(other.a_), generators_(other.generators_), queries_(other.queries_.load()) {}

std::size_t LengthOracle::length(std::span<const Rational> b) const {
  if (b.size() != generators_.size()) throw SizeMismatch("coefficient vector length");
  ++queries_;
  SquareFreeElem x(a_.cols());
  for (std::size_t i = 0; i < b.size(); ++i) x += generators_[i].scaled(b[i]);
  return zonotopal::length(x);
}

std::set<Rational> LengthOracle::critical_ratios(std::size_t i, std::size_t j) const {
  if (i >= a_.rows() || j >= a_.rows()) throw IndexOutOfRange("generator index out of range");
  ++queries_;
  std::set<Rational> out;
  if (i == j) return out;
  for (std::size_t k = 0; k < a_.cols(); ++k)
    if (a_(i, k) != 0 && a_(j, k) != 0) out.insert(a_(i, k) / a_(j, k));
  return out;
}

LengthOracle make_length_oracle(const QMatrix& a) {
  if (a.cols() > 16) throw GuardExceeded("length oracle: too many columns");
  for (std::size_t k = 0; k < a.cols(); ++k)
    if (is_zero(a.column(k))) throw ZeroColumn(k);
  return LengthOracle(a, generator_images(a));
}

}  // namespace zonotopal
