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

#ifndef ZONOTOPAL_RATIONAL_H_
#define ZONOTOPAL_RATIONAL_H_

#include <gmpxx.h>

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace zonotopal {

using Integer = mpz_class;
// mpq_class keeps itself canonical (reduced, positive denominator) after
// every arithmetic operation.
using Rational = mpq_class;

using Vector = std::vector<Rational>;
using IntVector = std::vector<Integer>;

// Accepts an optional sign, digits, and optionally "/" and a positive
// integer. Decimals, exponents and zero denominators are rejected.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

bool is_integer(const Rational& value);

// Primitive integer representative of a nonzero vector up to positive
// scaling: denominators cleared, gcd of entries 1. Sign is kept.
IntVector primitive(std::span<const Rational> v);
IntVector primitive(std::span<const Integer> v);

// As primitive(), additionally negated so the first nonzero entry is
// positive. This is the canonical form for comparing vectors up to scale.
IntVector canonical_primitive(std::span<const Rational> v);
IntVector canonical_primitive(std::span<const Integer> v);

Vector to_rational(std::span<const Integer> v);

bool is_zero(std::span<const Rational> v);

Rational dot(std::span<const Rational> a, std::span<const Rational> b);

}  // namespace zonotopal

#endif  // ZONOTOPAL_RATIONAL_H_
