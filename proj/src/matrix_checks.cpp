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

#include "hsnp/matrix_checks.hpp"

#include "hsnp/errors.hpp"
#include "hsnp/exp_sums.hpp"

namespace hsnp {

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

QMatrix operator*(const QMatrix& x, const QMatrix& y) {
  if (x.n_ != y.n_) throw InputError("dimension mismatch");
  QMatrix out(x.n_);
  for (std::size_t i = 0; i < x.n_; ++i)
    for (std::size_t k = 0; k < x.n_; ++k) {
      if (x(i, k) == 0) continue;
      for (std::size_t j = 0; j < x.n_; ++j) out(i, j) += x(i, k) * y(k, j);
    }
  return out;
}

// Faddeev-LeVerrier: char poly coefficients, then reverse with signs.
std::vector<Rational> fredholm_det(const QMatrix& A) {
  const std::size_t n = A.size();
  std::vector<Rational> c(n + 1, Rational(0));
  c[0] = 1;
  if (n == 0) return c;
  QMatrix M(n);
  std::vector<Rational> e(n + 1, Rational(0));  // char poly x^n + e_1 x^(n-1) + ... + e_n
  e[0] = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    M = A * M;
    for (std::size_t i = 0; i < n; ++i) M(i, i) += e[k - 1];
    QMatrix AM = A * M;
    Rational tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += AM(i, i);
    e[k] = -tr / Rational(static_cast<long>(k));
  }
  // det(1 - A T) = sum_k e_k T^k.
  for (std::size_t k = 1; k <= n; ++k) c[k] = e[k];
  return c;
}

Rational determinant(const QMatrix& A) {
  const std::size_t n = A.size();
  QMatrix m = A;
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m(piv, col) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(piv, j), m(col, j));
      det = -det;
    }
    det *= m(col, col);
    for (std::size_t i = col + 1; i < n; ++i) {
      if (m(i, col) == 0) continue;
      Rational f = m(i, col) / m(col, col);
      for (std::size_t j = col; j < n; ++j) m(i, j) -= f * m(col, j);
    }
  }
  return det;
}

QMatrix block_cyclic(const std::vector<QMatrix>& Ms) {
  if (Ms.empty()) throw InputError("need at least one matrix");
  const std::size_t n = Ms.front().size();
  const std::size_t a = Ms.size();
  for (const auto& m : Ms)
    if (m.size() != n) throw InputError("dimension mismatch");
  if (a == 1) return Ms.front();
  QMatrix B(a * n);
  auto put = [&](std::size_t bi, std::size_t bj, const QMatrix& m) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) B(bi * n + i, bj * n + j) = m(i, j);
  };
  put(0, a - 1, Ms[a - 1]);
  for (std::size_t t = 0; t + 1 < a; ++t) put(t + 1, t, Ms[t]);
  return B;
}

namespace {

QMatrix product(const std::vector<QMatrix>& Ms) {
  QMatrix P = Ms.front();
  for (std::size_t t = 1; t < Ms.size(); ++t) P = Ms[t] * P;
  return P;
}

}  // namespace

bool block_transfer_identity(const std::vector<QMatrix>& Ms) {
  const std::size_t a = Ms.size();
  auto lhs_small = fredholm_det(product(Ms));
  std::vector<Rational> lhs((lhs_small.size() - 1) * a + 1, Rational(0));
  for (std::size_t k = 0; k < lhs_small.size(); ++k) lhs[k * a] = lhs_small[k];
  auto rhs = fredholm_det(block_cyclic(Ms));
  return lhs == rhs;
}

MinorBound minor_valuation_bound(const std::vector<QMatrix>& Ms, std::size_t k, unsigned long p) {
  if (Ms.empty()) throw InputError("need at least one matrix");
  const std::size_t n = Ms.front().size();
  if (k > n) throw OutOfRangeError("k exceeds the matrix size");
  MinorBound out;
  out.coefficient = padic_valuation(fredholm_det(product(Ms))[k], p);
  Valuation total(Rational(0));
  // All k-subsets of {0..n-1} as bitmasks.
  std::vector<unsigned> subsets;
  for (unsigned mask = 0; mask < (1U << n); ++mask)
    if (static_cast<std::size_t>(__builtin_popcount(mask)) == k) subsets.push_back(mask);
  for (const auto& M : Ms) {
    Valuation best = Valuation::infinity();
    for (unsigned rows : subsets)
      for (unsigned cols : subsets) {
        QMatrix W(k);
        std::size_t wi = 0;
        for (std::size_t i = 0; i < n; ++i) {
          if (!(rows >> i & 1U)) continue;
          std::size_t wj = 0;
          for (std::size_t j = 0; j < n; ++j) {
            if (!(cols >> j & 1U)) continue;
            W(wi, wj++) = M(i, j);
          }
          ++wi;
        }
        best = min(best, padic_valuation(determinant(W), p));
      }
    total = total + best;
  }
  out.bound = total;
  return out;
}

QMatrix random_matrix(std::size_t n, long lo, long hi, std::mt19937_64& rng) {
  QMatrix m(n);
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo + 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = lo + static_cast<long>(uniform_below(rng, span));
  return m;
}

QMatrix random_valued_matrix(std::size_t n, unsigned long p, unsigned emax, long umax, std::mt19937_64& rng) {
  QMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      long u = -umax + static_cast<long>(uniform_below(rng, static_cast<std::uint64_t>(2 * umax + 1)));
      if (u != 0)
        while (u % static_cast<long>(p) == 0)
          u = -umax + static_cast<long>(uniform_below(rng, static_cast<std::uint64_t>(2 * umax + 1)));
      unsigned e = static_cast<unsigned>(uniform_below(rng, emax + 1));
      Integer v = u;
      for (unsigned t = 0; t < e; ++t) v *= static_cast<unsigned long>(p);
      m(i, j) = Rational(v);
    }
  return m;
}

}  // namespace hsnp
