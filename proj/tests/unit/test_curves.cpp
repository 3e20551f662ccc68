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


#include "doctest.h"
#include "hsnp/curves.hpp"
#include "hsnp/errors.hpp"

using namespace hsnp;

namespace {

Rational q(long n, long d = 1) { return make_rational(n, d); }

}  // namespace

TEST_CASE("genus") {
  CHECK(ASCurve{LaurentPolynomial::make(3, 1, 1, 0, {0, 1}), 1}.genus() == 0);
  CHECK(ASCurve{LaurentPolynomial::make(3, 1, 1, 1, {1, 0, 1}), 1}.genus() == 2);
  CHECK(ASCurve{LaurentPolynomial::make(3, 1, 1, 1, {1, 0, 1}), 2}.genus() == 4);
  CHECK(ASCurve{LaurentPolynomial::make(5, 1, 2, 0, {1, 0, 1}), 1}.genus() == 2);
}

TEST_CASE("point counts") {
  ASCurve line{LaurentPolynomial::make(3, 1, 1, 0, {0, 1}), 1};
  auto c = as_point_counts(line, 4);
  Integer pk = 1;
  for (unsigned k = 0; k < 4; ++k) {
    pk *= 3;
    CHECK(c[k] == pk + 1);
  }
  ASCurve K{LaurentPolynomial::make(3, 1, 1, 1, {1, 0, 1}), 1};
  auto ck = as_point_counts(K, 4);
  pk = 1;
  for (unsigned k = 0; k < 4; ++k) {
    pk *= 3;
    Integer dev = ck[k] - pk - 1;
    // Weil bound |dev| <= 2 g sqrt(q^k).
    CHECK(dev * dev <= 16 * pk);
  }
}

TEST_CASE("zeta numerators") {
  ASCurve line{LaurentPolynomial::make(3, 1, 1, 0, {0, 1}), 1};
  CHECK(zeta_numerator(line, NumeratorMethod::kPointCount).degree() == 0);
  ASCurve K{LaurentPolynomial::make(3, 1, 1, 1, {1, 0, 1}), 1};
  auto a = zeta_numerator(K, NumeratorMethod::kPointCount);
  auto b = zeta_numerator(K, NumeratorMethod::kCharacterProduct);
  CHECK(a.degree() == 4);
  CHECK(a.coeffs == b.coeffs);
  auto r = curve_check(K);
  CHECK(r.ok());
  CHECK(r.scaled == Polygon::from_segments({{q(0), q(1)}, {q(1), q(1)}}));
  ASCurve K2{LaurentPolynomial::make(3, 1, 1, 1, {1, 0, 1}), 2};
  auto r2 = curve_check(K2);
  CHECK(r2.ok());
  CHECK(r2.equal);
  CHECK(r2.numerator.degree() == 8);
}

TEST_CASE("dickson polynomials") {
  CHECK(dickson_poly(2, q(3)) == QPoly{q(-6), q(0), q(1)});
  CHECK(dickson_poly(3, q(2)) == QPoly{q(0), q(-6), q(0), q(1)});
  CHECK(dickson_poly(5, q(0)) == QPoly{q(0), q(0), q(0), q(0), q(0), q(1)});
  for (unsigned n = 0; n <= 8; ++n) CHECK(dickson_identity(n, q(-2, 3)));
}

TEST_CASE("permutation samples") {
  CHECK(is_global_permutation_sample(dickson_poly(5, q(1)), 7, 1));
  CHECK_FALSE(is_global_permutation_sample({q(0), q(0), q(1)}, 5, 1));
  CHECK(is_global_permutation_sample({q(0), q(0), q(0), q(1)}, 5, 1));
  CHECK_THROWS_AS(is_global_permutation_sample({q(1, 5), q(1)}, 5, 1), ReductionError);
}

TEST_CASE("first slope") {
  CHECK(first_slope({q(0), q(1)}, 5).is_infinite());
  CHECK(first_slope({q(0), q(0), q(1)}, 3) == Valuation(q(1, 2)));
}
