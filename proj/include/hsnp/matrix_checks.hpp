// Copyright 2026 The hsnp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Finite-matrix forms of the block-cyclic Fredholm transfer identity and
// the minor-valuation lower bound.

#ifndef HSNP_MATRIX_CHECKS_HPP
#define HSNP_MATRIX_CHECKS_HPP

#include <random>
#include <vector>

#include "hsnp/arith.hpp"

namespace hsnp {

/// Dense square matrix over Q, row major.
class QMatrix {
 public:
  QMatrix() = default;
  explicit QMatrix(std::size_t n) : n_(n), a_(n * n, Rational(0)) {}
  static QMatrix identity(std::size_t n);

  std::size_t size() const { return n_; }
  Rational& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

  friend QMatrix operator*(const QMatrix& x, const QMatrix& y);
  friend bool operator==(const QMatrix&, const QMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Rational> a_;
};

/// Coefficients c_0..c_n of det(1 - A T), low degree first.
std::vector<Rational> fredholm_det(const QMatrix& A);

/// det of a square matrix by fraction-free elimination.
Rational determinant(const QMatrix& A);

/// Block matrix of size a n with M_{a-1} in block (0, a-1) and M_t in block (t+1, t).
QMatrix block_cyclic(const std::vector<QMatrix>& Ms);

/// det(1 - (M_{a-1} ... M_0) T^a) == det(1 - M_[a] T).
bool block_transfer_identity(const std::vector<QMatrix>& Ms);

struct MinorBound {
  Valuation coefficient;
  Valuation bound;
  bool holds() const { return bound <= coefficient; }
};

/// ord_p of the T^k coefficient of det(1 - M_{a-1} ... M_0 T) against the sum
/// over t of the least ord_p of a k x k minor of M_t.
MinorBound minor_valuation_bound(const std::vector<QMatrix>& Ms, std::size_t k, unsigned long p);

/// Entries uniform in [lo, hi].
QMatrix random_matrix(std::size_t n, long lo, long hi, std::mt19937_64& rng);
/// Entries p^e * u with e in [0, emax] and u a unit in [-umax, umax] (zero allowed).
QMatrix random_valued_matrix(std::size_t n, unsigned long p, unsigned emax, long umax, std::mt19937_64& rng);

}  // namespace hsnp

#endif  // HSNP_MATRIX_CHECKS_HPP
