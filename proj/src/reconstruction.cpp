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

#include <exception>
#include <random>
#include <sstream>
#include <stdexcept>

#include "zonotopal/errors.h"

namespace zonotopal {

ProjPoint::ProjPoint(std::span<const Rational> coords)
    : coords_(canonical_primitive(coords)) {
  if (is_zero(coords)) throw SizeMismatch("projective point from the zero vector");
}

ProjPoint::ProjPoint(std::span<const Integer> coords)
    : coords_(canonical_primitive(coords)) {
  for (const auto& x : coords_)
    if (x != 0) return;
  throw SizeMismatch("projective point from the zero vector");
}

std::vector<std::size_t> ProjPoint::support() const {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < coords_.size(); ++i)
    if (coords_[i] != 0) s.push_back(i);
  return s;
}

std::string ProjPoint::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) out += ":";
    out += coords_[i].get_str();
  }
  return out + ")";
}

std::string to_string(const ProjMultiset& s) {
  std::ostringstream out;
  out << "{";
  bool first = true;
  for (const auto& [p, mult] : s) {
    if (!first) out << ", ";
    first = false;
    out << p.to_string() << ":" << mult;
  }
  out << "}";
  return out.str();
}

std::set<Rational> ratio_set(const LengthOracle& oracle) {
  std::set<Rational> s;
  const std::size_t n = oracle.generator_count();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      auto r = oracle.critical_ratios(i, j);
      s.insert(r.begin(), r.end());
    }
  return s;
}

CandidateSet candidate_set(const std::set<Rational>& ratios, std::size_t n, bool prune,
                           std::uint64_t max_candidates) {
  std::set<Rational> values = ratios;
  values.insert(1);
  const std::vector<Rational> fill(values.begin(), values.end());
  Integer bound = 1;
  for (std::size_t i = 0; i + 1 < n; ++i) bound *= static_cast<unsigned long>(fill.size());
  bound <<= n;
  if (n >= 32 || bound > max_candidates) throw GuardExceeded("candidate set too large");

  std::set<ProjPoint> found;
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
    std::vector<std::size_t> support;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1u) support.push_back(i);
    // Odometer over the non-leading support coordinates.
    std::vector<std::size_t> digit(support.size() - 1, 0);
    while (true) {
      Vector coords(n);
      coords[support[0]] = 1;
      for (std::size_t t = 1; t < support.size(); ++t) coords[support[t]] = fill[digit[t - 1]];
      bool keep = true;
      if (prune) {
        for (std::size_t a = 0; a < support.size() && keep; ++a)
          for (std::size_t b = 0; b < support.size() && keep; ++b)
            if (a != b) keep = values.count(coords[support[a]] / coords[support[b]]) > 0;
      }
      if (keep) found.insert(ProjPoint(std::span<const Rational>(coords)));
      std::size_t t = 0;
      while (t < digit.size() && ++digit[t] == fill.size()) digit[t++] = 0;
      if (t == digit.size()) break;
    }
  }
  return {ratios, std::vector<ProjPoint>(found.begin(), found.end())};
}

bool dominates(const ProjPoint& p, const ProjPoint& q) {
  if (p.dim() != q.dim()) throw SizeMismatch("projective points of different dimension");
  const auto& a = p.coords();
  const auto& b = q.coords();
  std::size_t lead = b.size();
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (b[i] == 0) continue;
    if (a[i] == 0) return false;
    if (lead == b.size()) lead = i;
    if (b[i] * a[lead] != a[i] * b[lead]) return false;
  }
  return true;
}

namespace {

std::mt19937_64 stream_rng(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream),
                    static_cast<std::uint32_t>(stream >> 32)};
  return std::mt19937_64(seq);
}

constexpr int kMaxRejections = 100;

}  // namespace

std::size_t cumulative_multiplicity(const LengthOracle& oracle, const ProjPoint& s,
                                    const ReconstructOptions& opts, std::uint64_t stream) {
  if (opts.trials == 0) throw std::invalid_argument("trials must be positive");
  const std::size_t n = oracle.generator_count();
  if (s.dim() != n) throw SizeMismatch("candidate dimension");
  const auto support = s.support();
  const auto& sc = s.coords();
  auto rng = stream_rng(opts.seed, stream);
  std::uniform_int_distribution<long long> draw(-opts.range, opts.range);

  std::size_t best_b = 0, best_c = 0;
  for (std::size_t trial = 0; trial < opts.trials; ++trial) {
    Vector b(n);
    for (int tries = 0;; ++tries) {
      if (tries == kMaxRejections) throw RandomnessExhausted();
      bool ok = true;
      for (auto i : support) {
        b[i] = static_cast<long>(draw(rng));
        ok = ok && b[i] != 0;
      }
      if (ok) break;
    }
    best_b = std::max(best_b, oracle.length(b));

    // A single coordinate forces c = 0, whose length is 0.
    if (support.size() == 1) continue;
    const std::size_t solved = support.back();
    Vector c(n);
    for (int tries = 0;; ++tries) {
      if (tries == kMaxRejections) throw RandomnessExhausted();
      bool ok = true;
      Rational acc = 0;
      for (auto i : support) {
        if (i == solved) continue;
        c[i] = static_cast<long>(draw(rng));
        ok = ok && c[i] != 0;
        acc += c[i] * Rational(sc[i]);
      }
      c[solved] = -acc / Rational(sc[solved]);
      if (ok && c[solved] != 0) break;
    }
    best_c = std::max(best_c, oracle.length(c));
  }
  if (best_c > best_b)
    throw NegativeMultiplicity("generic length below constrained length at " + s.to_string());
  return best_b - best_c;
}

ProjMultiset invert_cumulative(const std::vector<ProjPoint>& candidates,
                               const std::vector<std::size_t>& cumulative) {
  if (candidates.size() != cumulative.size()) throw SizeMismatch("cumulative counts");
  const std::size_t count = candidates.size();
  std::vector<std::vector<std::size_t>> supports(count);
  std::size_t n = 0;
  for (std::size_t i = 0; i < count; ++i) {
    supports[i] = candidates[i].support();
    n = std::max(n, candidates[i].dim());
  }
  std::vector<long long> mult(count, 0);
  for (std::size_t size = n; size >= 1; --size) {
    for (std::size_t i = 0; i < count; ++i) {
      if (supports[i].size() != size) continue;
      long long m = static_cast<long long>(cumulative[i]);
      for (std::size_t j = 0; j < count; ++j) {
        if (j == i || supports[j].size() < size) continue;
        if (!dominates(candidates[j], candidates[i])) continue;
        if (supports[j].size() == size)
          throw std::logic_error("dominance inside a support stratum");
        m -= mult[j];
      }
      if (m < 0)
        throw NegativeMultiplicity("negative multiplicity at " + candidates[i].to_string());
      mult[i] = m;
    }
  }
  ProjMultiset out;
  for (std::size_t i = 0; i < count; ++i)
    if (mult[i] > 0) out.emplace(candidates[i], static_cast<std::size_t>(mult[i]));
  return out;
}

Reconstruction reconstruct(const LengthOracle& oracle, const ReconstructOptions& opts) {
  Reconstruction r;
  const auto ratios = ratio_set(oracle);
  for (const auto& s : ratios)
    if (!ratios.count(1 / s)) throw std::logic_error("ratio set is not closed under inversion");
  r.candidates = candidate_set(ratios, oracle.generator_count());
  const auto& cands = r.candidates.candidates;
  r.cumulative.assign(cands.size(), 0);
  std::exception_ptr failure;
  const long count = static_cast<long>(cands.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < count; ++i) {
    try {
      r.cumulative[i] = cumulative_multiplicity(oracle, cands[i], opts, static_cast<std::uint64_t>(i));
    } catch (...) {
#pragma omp critical
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  r.columns = invert_cumulative(cands, r.cumulative);
  return r;
}

}  // namespace zonotopal
