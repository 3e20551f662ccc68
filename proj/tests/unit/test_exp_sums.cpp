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


#include <random>

#include "doctest.h"
#include "hsnp/errors.hpp"
#include "hsnp/exp_sums.hpp"
#include "hsnp/hs_polygons.hpp"
#include "hsnp/local_ring.hpp"
#include "hsnp/residue_cycles.hpp"

using namespace hsnp;

namespace {

Rational q(long n, long d = 1) { return make_rational(n, d); }
CyclotomicInteger z(unsigned long p, long k) { return CyclotomicInteger::zeta_power(p, k); }
CyclotomicInteger n(unsigned long p, long v) { return CyclotomicInteger::from_integer(p, v); }

}  // namespace

TEST_CASE("laurent polynomial validation") {
  CHECK_THROWS_AS(LaurentPolynomial::make(3, 1, 1, 1, {0, 0, 1}), DegenerateInputError);
  CHECK_THROWS_AS(LaurentPolynomial::make(3, 1, 1, 0, {1, 0}), DegenerateInputError);
  CHECK_THROWS_AS(LaurentPolynomial::make(3, 1, 1, 0, {1}), InputError);
  CHECK_THROWS_AS(LaurentPolynomial::make(3, 1, 1, 0, {5, 1}), InputError);
  auto P = LaurentPolynomial::make(3, 1, 1, 1, {1, 0, 1});
  CHECK(P.str() == "x + x^-1");
  RationalLaurent R{1, 1, {q(1, 3), q(0), q(1)}};
  CHECK_THROWS_AS(R.reduce(3), ReductionError);
}

TEST_CASE("exponential sums over F_3") {
  auto X = LaurentPolynomial::make(3, 1, 1, 0, {0, 1});
  CHECK(exp_sum(X, 1, Convention::kTorus) == n(3, -1));
  CHECK(exp_sum(X, 1, Convention::kAffine) == n(3, 0));
  auto K = LaurentPolynomial::make(3, 1, 1, 1, {1, 0, 1});
  CHECK(exp_sum(K, 1, Convention::kTorus) == n(3, -1));
  CHECK_THROWS_AS(exp_sum(K, 1, Convention::kAffine), ConventionError);
}

TEST_CASE("twisted sums and Gauss sums") {
  auto X = LaurentPolynomial::make(3, 1, 1, 0, {0, 1});
  auto K = LaurentPolynomial::make(5, 1, 1, 1, {2, 0, 1});
  CHECK(twisted_exp_sum(X, 1, 1, 2) == BicyclotomicInteger::from_cyclotomic(z(3, 1) - z(3, 2), 2));
  for (unsigned k = 1; k <= 2; ++k)
    CHECK(twisted_exp_sum(K, k, 0, 4) == BicyclotomicInteger::from_cyclotomic(exp_sum(K, k, Convention::kTorus), 4));
  // Galois stability r -> p r for P defined over F_p.
  auto K25 = LaurentPolynomial::make(5, 2, 1, 1, {2, 0, 1});
  CHECK(twisted_exp_sum(K25, 1, 1, 8) == twisted_exp_sum(K25, 1, 5, 8));
  CHECK(twisted_exp_sum(K25, 2, 3, 8) == twisted_exp_sum(K25, 2, 7, 8));
  CHECK_THROWS_AS(twisted_exp_sum(K, 1, 1, 3), DivisibilityError);

  CHECK(gauss_sum(3, 1, 0, 2) == BicyclotomicInteger::from_integer(3, 2, 1));
  CHECK(gauss_sum(3, 1, 1, 2).to_cyclotomic() == z(3, 2) - z(3, 1));
  CHECK(gauss_sum(3, 1, 1, 2).to_cyclotomic() == n(3, -1) - z(3, 1) - z(3, 1));
  CHECK(pi_valuation(gauss_sum(3, 1, 1, 2).to_cyclotomic()) == Valuation(q(1, 2)));
  CHECK(pi_valuation(gauss_sum(5, 1, 1, 2).to_cyclotomic()) == Valuation(q(1, 2)));
}

TEST_CASE("Stickelberger valuations of Gauss sums") {
  for (unsigned long p : {3UL, 5UL, 7UL})
    for (long s = 2; s <= 6; ++s) {
      if (s % static_cast<long>(p) == 0) continue;
      unsigned a = static_cast<unsigned>(multiplicative_order(p % static_cast<unsigned long>(s), s));
      auto model = LocalRingModel::anchored(p, static_cast<unsigned long>(s), a);
      for (long r = 1; r < s; ++r) {
        auto v = local_valuation(gauss_sum(p, a, r, s), *model);
        CHECK(v.value() / a == digit_lambda(p, a, r, s).lambda);
      }
    }
}

TEST_CASE("L-polynomials") {
  auto X = LaurentPolynomial::make(3, 1, 1, 0, {0, 1});
  auto L = l_polynomial(X, 2, Convention::kAffine);
  REQUIRE(L.degree() == 1);
  CHECK(L.coeffs[1] == BicyclotomicInteger::from_cyclotomic(z(3, 1) - z(3, 2), 1));
  CHECK(newton_polygon(L) == Polygon::from_segments({{q(1, 2), q(1)}}));

  auto K = LaurentPolynomial::make(3, 1, 1, 1, {1, 0, 1});
  auto L1 = l_polynomial(K, 1, Convention::kTorus);
  CHECK(L1.degree() == 2);
  CHECK(newton_polygon(L1) == Polygon::from_segments({{q(0), q(1)}, {q(1), q(1)}}));
  auto L2 = l_polynomial(K, 2, Convention::kTorus);
  CHECK(L2.degree() == 4);
  CHECK(newton_polygon(L2) == Polygon::from_segments({{q(0), q(1)}, {q(1, 2), q(2)}, {q(1), q(1)}}));
  CHECK(newton_polygon(L2) == hodge_polygon(2, 2));

  CHECK(l_degree(1, 0, 2, Convention::kAffine) == 1);
  CHECK(l_degree(1, 0, 2, Convention::kTorus) == 2);
  CHECK(l_degree(2, 1, 3, Convention::kTorus) == 9);
}

TEST_CASE("twisted L-polynomials") {
  auto K = LaurentPolynomial::make(5, 1, 1, 1, {2, 0, 1});
  CHECK(twisted_l_polynomial(K, 0, 2, Convention::kTorus).coeffs == l_polynomial(K, 1, Convention::kTorus).coeffs);
  std::mt19937_64 rng(21);
  for (int t = 0; t < 10; ++t) {
    auto P = random_laurent(5, 1, 2, 1, rng);
    auto L = twisted_l_polynomial(P, 1, 2, Convention::kTorus);
    CHECK(lies_above(newton_polygon(L), twisted_hs_polygon(2, 1, 2, 1, 1)));
  }
}

TEST_CASE("splitting identity") {
  auto K = LaurentPolynomial::make(3, 1, 1, 1, {1, 0, 1});
  CHECK(splitting_check(K, 1, Convention::kTorus).ok());
  CHECK(splitting_check(K, 2, Convention::kTorus).ok());
  auto X = LaurentPolynomial::make(5, 1, 1, 0, {0, 1});
  auto chk = splitting_check(X, 4, Convention::kAffine);
  CHECK(chk.ok());
  CHECK(chk.factors.size() == 4);
  std::mt19937_64 rng(4);
  for (int t = 0; t < 5; ++t) {
    auto P = random_laurent(7, 1, 1, 1, rng);
    CHECK(splitting_check(P, 3, Convention::kTorus).ok());
    CHECK(l_polynomial_split(P, 3, Convention::kTorus).coeffs == l_polynomial(P, 3, Convention::kTorus).coeffs);
  }
}

TEST_CASE("count conservation") {
  std::mt19937_64 rng(8);
  auto P = random_laurent(5, 1, 2, 1, rng);
  FieldTower T(5, 1, 2);
  auto counts = enumerate_counts_naive(T, P, 2, Convention::kTorus, 4, 1);
  std::uint64_t total = 0;
  for (auto c : counts) total += c;
  CHECK(total == 24);
}

TEST_CASE("size cap and routing") {
  auto P = LaurentPolynomial::make(13, 1, 2, 1, {1, 3, 0, 1});
  LOptions opt;
  opt.cap = 1U << 14;
  CHECK_THROWS_AS(l_polynomial(P, 4, Convention::kTorus, opt), SizeCapError);
  auto routed = l_polynomial_routed(P, 4, Convention::kTorus, Route::kAuto, opt);
  CHECK(routed.route == Route::kSplit);
  CHECK(routed.L.degree() == 12);
}
