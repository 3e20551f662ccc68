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

// Exact elements of Z[zeta_p] and Z[zeta_p, zeta_s] (gcd(p, s) = 1).
//
// Z[zeta_p] uses the basis 1, zeta, ..., zeta^(p-2). The bicyclotomic ring
// is the tensor product with Z[zeta_s] = Z[y]/Phi_s(y), so coordinates form
// a (p-1) x phi(s) integer matrix; both bases are integral bases, so an
// element is an algebraic integer exactly when all coordinates are integers.

#ifndef HSNP_CYCLOTOMIC_HPP
#define HSNP_CYCLOTOMIC_HPP

#include <string>
#include <vector>

#include "hsnp/arith.hpp"
#include "hsnp/polygon.hpp"

namespace hsnp {

/// Integer coefficients of Phi_n, low degree first (cached).
const std::vector<Integer>& cyclotomic_polynomial(unsigned long n);

class CyclotomicInteger {
 public:
  CyclotomicInteger() = default;
  explicit CyclotomicInteger(unsigned long p);
  CyclotomicInteger(unsigned long p, std::vector<Integer> coords);
  static CyclotomicInteger from_integer(unsigned long p, const Integer& n);
  /// zeta_p^k for any integer k.
  static CyclotomicInteger zeta_power(unsigned long p, long k);
  /// sum_c counts[c] zeta^c, counts indexed by 0..p-1.
  static CyclotomicInteger from_counts(unsigned long p, const std::vector<Integer>& counts);

  unsigned long p() const { return p_; }
  const std::vector<Integer>& coords() const { return c_; }
  bool is_zero() const;
  Integer coordinate_sum() const;

  CyclotomicInteger operator-() const;
  friend CyclotomicInteger operator+(const CyclotomicInteger& x, const CyclotomicInteger& y);
  friend CyclotomicInteger operator-(const CyclotomicInteger& x, const CyclotomicInteger& y);
  friend CyclotomicInteger operator*(const CyclotomicInteger& x, const CyclotomicInteger& y);
  friend bool operator==(const CyclotomicInteger& x, const CyclotomicInteger& y) = default;

  /// zeta -> zeta^-1.
  CyclotomicInteger conj() const;
  /// Exact division by (1 - zeta); requires coordinate_sum divisible by p.
  CyclotomicInteger divide_by_pi() const;

  std::string str() const;

 private:
  unsigned long p_ = 0;
  std::vector<Integer> c_;
};

class BicyclotomicInteger {
 public:
  BicyclotomicInteger() = default;
  BicyclotomicInteger(unsigned long p, unsigned long s);
  BicyclotomicInteger(unsigned long p, unsigned long s, std::vector<Integer> coords);
  static BicyclotomicInteger from_integer(unsigned long p, unsigned long s, const Integer& n);
  /// zeta_p^i zeta_s^j for any integers i, j.
  static BicyclotomicInteger monomial(unsigned long p, unsigned long s, long i, long j);
  static BicyclotomicInteger from_cyclotomic(const CyclotomicInteger& x, unsigned long s);
  /// sum counts[c * s + j] zeta_p^c zeta_s^j over 0 <= c < p, 0 <= j < s.
  static BicyclotomicInteger from_grid(unsigned long p, unsigned long s, const std::vector<Integer>& grid);

  unsigned long p() const { return p_; }
  unsigned long s() const { return s_; }
  unsigned long phi() const { return phi_; }
  const std::vector<Integer>& coords() const { return c_; }
  const Integer& coord(unsigned long i, unsigned long j) const { return c_[i * phi_ + j]; }
  bool is_zero() const;
  /// True when only the zeta_s^0 column is populated.
  bool in_prime_subring() const;
  /// Throws DomainError unless in_prime_subring().
  CyclotomicInteger to_cyclotomic() const;
  /// Same element in Z[zeta_p, zeta_t] for a multiple t of s.
  BicyclotomicInteger lift(unsigned long t) const;

  BicyclotomicInteger operator-() const;
  friend BicyclotomicInteger operator+(const BicyclotomicInteger& x, const BicyclotomicInteger& y);
  friend BicyclotomicInteger operator-(const BicyclotomicInteger& x, const BicyclotomicInteger& y);
  friend BicyclotomicInteger operator*(const BicyclotomicInteger& x, const BicyclotomicInteger& y);
  friend bool operator==(const BicyclotomicInteger& x, const BicyclotomicInteger& y) = default;

  BicyclotomicInteger scaled(const Integer& c) const;
  /// Coordinatewise exact division; false (x untouched) when some coordinate is not divisible.
  bool try_divexact(const Integer& d);
  BicyclotomicInteger conj() const;
  /// Galois automorphism zeta_p -> zeta_p^u, zeta_s -> zeta_s^v.
  BicyclotomicInteger galois(long u, long v) const;

  std::string str() const;

 private:
  unsigned long p_ = 0;
  unsigned long s_ = 1;
  unsigned long phi_ = 1;
  std::vector<Integer> c_;
};

/// ord_p = v_pi(x) / (p - 1) with pi = 1 - zeta_p; infinity for zero.
Valuation pi_valuation(const CyclotomicInteger& x);

enum class DegreeCheck {
  /// Vanishing when D + 1 sums are given, otherwise the Weil norm.
  kAuto,
  /// Requires D + 1 sums; coefficient D + 1 must vanish.
  kVanishing,
  /// Requires D sums; b_D * conj(b_D) must equal Q^D.
  kWeilNorm,
};

struct LPolynomial {
  unsigned long p = 0;
  /// Base field exponent: coefficients of T^k come from sums over F_{p^(a k)}.
  unsigned a = 1;
  /// zeta_s modulus of the coefficient ring (1 for Z[zeta_p]).
  unsigned long s = 1;
  /// Degree n of the field whose generator pins zeta_s (0: lexicographic prime).
  unsigned anchor = 0;
  std::vector<BicyclotomicInteger> coeffs;

  long degree() const { return static_cast<long>(coeffs.size()) - 1; }
  std::string ring_tag() const;
  /// Substitutes T -> T^m.
  LPolynomial substitute_power(unsigned m) const;
  std::string str() const;
};

LPolynomial multiply(const LPolynomial& x, const LPolynomial& y);

/// exp(sum S_k T^k / k) truncated to degree D, with exact division.
/// Throws DegreeMismatchError on a non-integral coefficient or failed check.
std::vector<BicyclotomicInteger> series_exp(const std::vector<BicyclotomicInteger>& sums, long degree,
                                            DegreeCheck check = DegreeCheck::kAuto, const Integer& weight = 0);

/// Valuation of one coefficient in the normalization ord_p(p) = 1.
Valuation coefficient_valuation(const LPolynomial& L, const BicyclotomicInteger& x);

/// Lower hull of (i, ord_p(b_i) / a).
Polygon newton_polygon(const LPolynomial& L, unsigned a);
inline Polygon newton_polygon(const LPolynomial& L) { return newton_polygon(L, L.a); }

}  // namespace hsnp

#endif  // HSNP_CYCLOTOMIC_HPP
