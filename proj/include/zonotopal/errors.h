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

#ifndef ZONOTOPAL_ERRORS_H_
#define ZONOTOPAL_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace zonotopal {

// Base of every error raised by the library. The CLI maps subclasses to
// exit codes: ParseError and precondition failures -> 1, GuardExceeded -> 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

// A desk-scale size limit would be exceeded.
class GuardExceeded : public Error {
 public:
  using Error::Error;
};

class RankDeficient : public Error {
 public:
  explicit RankDeficient(std::size_t rank)
      : Error("matrix is rank deficient (rank " + std::to_string(rank) + ")"),
        rank_(rank) {}
  std::size_t rank() const { return rank_; }

 private:
  std::size_t rank_;
};

class NonSquare : public Error {
 public:
  NonSquare() : Error("matrix is not square") {}
};

class SizeMismatch : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

class NotNilpotent : public Error {
 public:
  NotNilpotent() : Error("element has a nonzero constant term") {}
};

class ZeroColumn : public Error {
 public:
  explicit ZeroColumn(std::size_t column)
      : Error("column " + std::to_string(column) + " is zero"), column_(column) {}
  std::size_t column() const { return column_; }

 private:
  std::size_t column_;
};

class NonIntegerColumns : public Error {
 public:
  NonIntegerColumns() : Error("lattice enumeration needs integer columns") {}
};

// Raised when a Hilbert function does not vanish where it must. Always a bug.
class DegreeBoundViolated : public Error {
 public:
  using Error::Error;
};

class RandomnessExhausted : public Error {
 public:
  RandomnessExhausted() : Error("too many degenerate random draws") {}
};

class NegativeMultiplicity : public Error {
 public:
  using Error::Error;
};

class NotUnimodular : public Error {
 public:
  NotUnimodular() : Error("matrix is not totally unimodular") {}
};

class NonWitnessableIsoMatroids : public Error {
 public:
  NonWitnessableIsoMatroids()
      : Error("isomorphic regular matroids without a z-equivalence witness") {}
};

}  // namespace zonotopal

#endif  // ZONOTOPAL_ERRORS_H_
