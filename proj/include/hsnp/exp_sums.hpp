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

// Exponential sums of P(x^s), twisted sums, Gauss sums and L-polynomials.
//
// Sums are never evaluated with complex numbers. For x = g^e in F_{q^k}
// the trace of a_i x^(i s) is read from the field's trace table at index
// log(a_i) + i s e, and the character value is an exponent j mod s. The
// enumeration produces a count table N[c][j] and the sum is
// sum N[c][j] zeta_p^c zeta_s^j.

#ifndef HSNP_EXP_SUMS_HPP
#define HSNP_EXP_SUMS_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "hsnp/arith.hpp"
#include "hsnp/cyclotomic.hpp"
#include "hsnp/finite_field.hpp"

namespace hsnp {

enum class Convention { kTorus, kAffine };

Convention parse_convention(const std::string& name);
std::string to_string(Convention c);

/// Laurent polynomial sum_{i=-d2}^{d1} a_i x^i over F_{p^a}; coefficients
/// are element codes (sum c_j p^j) in the deterministic model of F_{p^a}.
struct LaurentPolynomial {
  unsigned long p = 0;
  unsigned a = 1;
  long d1 = 1;
  long d2 = 0;
  /// a_{-d2}, ..., a_{d1}.
  std::vector<std::uint64_t> coeffs;

  /// Validates degrees, codes, a_{d1} != 0, and a_{-d2} != 0 when d2 > 0.
  static LaurentPolynomial make(unsigned long p, unsigned a, long d1, long d2, std::vector<std::uint64_t> coeffs);

  std::uint64_t coeff(long i) const { return coeffs[static_cast<std::size_t>(i + d2)]; }
  /// c * P for c in F_p.
  LaurentPolynomial scaled(std::uint64_t c) const;
  /// Same polynomial with coefficients in F_{p^(a k)}.
  LaurentPolynomial embedded(unsigned k, std::uint64_t cap = kDefaultCap) const;
  std::string str() const;

  friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;
};

/// Laurent polynomial with rational coefficients, reduced mod p on demand.
struct RationalLaurent {
  long d1 = 1;
  long d2 = 0;
  std::vector<Rational> coeffs;

  /// Throws ReductionError when p divides a denominator, DegenerateInputError
  /// when an extreme coefficient vanishes mod p.
  LaurentPolynomial reduce(unsigned long p) const;
};

/// Uniform integer in [0, n) by rejection sampling (portable across platforms).
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n);

/// Monic at x^{d1}; other coefficients uniform in F_q; a_{-d2} resampled until nonzero.
LaurentPolynomial random_laurent(unsigned long p, unsigned a, long d1, long d2, std::mt19937_64& rng);

/// Raw enumeration input, exposed for tests and benchmarks.
struct SumSpec {
  /// (exponent of x, log_g of the coefficient in the enumerated field).
  std::vector<std::pair<long, std::uint64_t>> terms;
  /// Character exponent at x = g^e is chi_step * e mod chi_mod.
  std::uint64_t chi_mod = 1;
  std::uint64_t chi_step = 0;
  /// Include x = 0 (trivial character only); trace of P(0).
  bool affine = false;
  std::uint32_t affine_trace = 0;
};

/// Count table N[c * chi_mod + j] over the field.
std::vector<std::uint64_t> enumerate_counts(const GaloisField& field, const SumSpec& spec);

/// Slow reference: evaluates P(x^s) with field arithmetic at every element.
std::vector<std::uint64_t> enumerate_counts_naive(const FieldTower& tower, const LaurentPolynomial& P, long s,
                                                  Convention convention, std::uint64_t chi_mod, std::uint64_t r);

/// S_k(P(x^s)) over F_{q^k}.
CyclotomicInteger exp_sum(const LaurentPolynomial& P, unsigned k, Convention convention, long s = 1,
                          std::uint64_t cap = kDefaultCap);

/// S_k(P, chi_s^r) over F_{q^k}, chi_s^r(x) = zeta_s^(r log_{g_q} N(x)).
/// Needs s | r (q - 1); the result lives in Z[zeta_p, zeta_s].
BicyclotomicInteger twisted_exp_sum(const LaurentPolynomial& P, unsigned k, long r, long s,
                                    std::uint64_t cap = kDefaultCap);

/// -sum_{x in F_q^*} psi(x) chi_s^{-r}(x) over F_{p^a}; needs s | p^a - 1.
BicyclotomicInteger gauss_sum(unsigned long p, unsigned a, long r, long s, std::uint64_t cap = kDefaultCap);

struct LOptions {
  std::uint64_t cap = kDefaultCap;
  DegreeCheck check = DegreeCheck::kAuto;
};

/// Degree of L(P(x^s)) under the convention.
long l_degree(long d1, long d2, long s, Convention convention);
/// Degree of L(P, chi_s^r) with (r, s) already reduced (s = 1: trivial character).
long twisted_l_degree(long d1, long d2, long s_reduced, Convention convention);

/// Number of power sums the direct route would use, or 0 when it exceeds the cap.
unsigned direct_sum_count(unsigned long p, unsigned a, long degree, bool pure, const LOptions& options);

/// First kmax power sums S_k(P(x^s)).
std::vector<CyclotomicInteger> power_sums(const LaurentPolynomial& P, long s, Convention convention, unsigned kmax,
                                          std::uint64_t cap = kDefaultCap);

/// L(P(x^s)/F_q; T) from direct power sums.
LPolynomial l_polynomial(const LaurentPolynomial& P, long s, Convention convention, const LOptions& options = {});

/// L(P/F_q, chi_s^r; T) in Z[zeta_p, zeta_{s'}], (r', s') = (r, s) / gcd(r, s).
LPolynomial twisted_l_polynomial(const LaurentPolynomial& P, long r, long s, Convention convention,
                                 const LOptions& options = {});

struct SplitFactor {
  long representative = 0;
  long length = 1;
  LPolynomial factor;
};

/// One twisted factor per cycle of multiplication by q mod s.
std::vector<SplitFactor> split_factors(const LaurentPolynomial& P, long s, Convention convention,
                                       const LOptions& options = {});

/// L(P(x^s)) as the product of the twisted factors, in Z[zeta_p].
LPolynomial l_polynomial_split(const LaurentPolynomial& P, long s, Convention convention, const LOptions& options = {});

enum class Route { kAuto, kDirect, kSplit };

struct RoutedL {
  LPolynomial L;
  Route route = Route::kDirect;
};

/// Direct when within the cap, otherwise through the split factors.
RoutedL l_polynomial_routed(const LaurentPolynomial& P, long s, Convention convention, Route route = Route::kAuto,
                            const LOptions& options = {});

struct SplitCheck {
  bool polynomial_identity = false;
  bool sum_identity = false;
  LPolynomial direct;
  LPolynomial product;
  std::vector<SplitFactor> factors;
  bool ok() const { return polynomial_identity && sum_identity; }
};

/// Compares the direct L-polynomial with the product of twisted factors,
/// and checks S_k(P(x^s)) = sum over characters of order dividing gcd(s, q^k - 1).
SplitCheck splitting_check(const LaurentPolynomial& P, long s, Convention convention, const LOptions& options = {});

}  // namespace hsnp

#endif  // HSNP_EXP_SUMS_HPP
