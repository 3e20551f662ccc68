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

// Artin-Schreier curves y^p - y = P(x^s), Dickson polynomials and
// permutation experiments.

#ifndef HSNP_CURVES_HPP
#define HSNP_CURVES_HPP

#include <cstdint>
#include <vector>

#include "hsnp/arith.hpp"
#include "hsnp/cyclotomic.hpp"
#include "hsnp/exp_sums.hpp"
#include "hsnp/polygon.hpp"

namespace hsnp {

struct ASCurve {
  LaurentPolynomial P;
  long s = 1;

  /// (p-1) s (d1 + d2) / 2, or (p-1)(s d1 - 1) / 2 with one pole.
  long genus() const;
  /// Torus for two poles, affine line for one.
  Convention convention() const { return P.d2 > 0 ? Convention::kTorus : Convention::kAffine; }
};

/// #C(F_{q^k}) on the smooth projective model for k = 1..kmax.
std::vector<Integer> as_point_counts(const ASCurve& curve, unsigned kmax, std::uint64_t cap = kDefaultCap);

enum class NumeratorMethod { kPointCount, kCharacterProduct };

/// Numerator of the zeta function, degree 2g, coefficients in Z.
LPolynomial zeta_numerator(const ASCurve& curve, NumeratorMethod method, const LOptions& options = {});

struct CurveReport {
  long genus = 0;
  std::vector<Integer> counts;
  LPolynomial numerator;
  bool methods_agree = false;
  Polygon newton;
  Polygon scaled;
  Polygon hs;
  bool above = false;
  bool equal = false;
  bool predicate = false;
  bool ok() const { return methods_agree && above && equal == predicate; }
};

/// Computes the numerator both ways and compares NP / (p - 1) with HS.
CurveReport curve_check(const ASCurve& curve, const LOptions& options = {});

/// Dense polynomial over Q, low degree first.
using QPoly = std::vector<Rational>;

/// D_0 = 2, D_1 = x, D_{n+1} = x D_n - c D_{n-1}.
QPoly dickson_poly(unsigned n, const Rational& c);

/// Checks D_n(u + c/u, c) = u^n + (c/u)^n as Laurent polynomials in u.
bool dickson_identity(unsigned n, const Rational& c);

/// f mod p as codes in F_p; throws ReductionError when p divides a denominator.
std::vector<std::uint64_t> reduce_poly(const QPoly& f, unsigned long p);

/// Whether x -> f(x) permutes F_{p^j} for every j = 1..level.
bool is_global_permutation_sample(const QPoly& f, unsigned long p, unsigned level, std::uint64_t cap = kDefaultCap);

/// ord_p of sum_{x in F_p} psi(f(x)); infinity when the sum vanishes.
Valuation first_slope(const QPoly& f, unsigned long p);

}  // namespace hsnp

#endif  // HSNP_CURVES_HPP
