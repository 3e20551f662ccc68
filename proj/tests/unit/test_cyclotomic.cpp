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
#include "hsnp/cyclotomic.hpp"
#include "hsnp/local_ring.hpp"

using namespace hsnp;

namespace {

CyclotomicInteger random_cyc(unsigned long p, std::mt19937_64& rng) {
  std::vector<Integer> c;
  for (unsigned long i = 0; i + 1 < p; ++i) c.push_back(Integer(static_cast<long>(rng() % 21) - 10));
  return CyclotomicInteger(p, c);
}

BicyclotomicInteger random_bi(unsigned long p, unsigned long s, std::mt19937_64& rng) {
  std::vector<Integer> c;
  for (std::size_t i = 0; i < (p - 1) * euler_phi(s); ++i) c.push_back(Integer(static_cast<long>(rng() % 21) - 10));
  return BicyclotomicInteger(p, s, c);
}

CyclotomicInteger z(unsigned long p, long k) { return CyclotomicInteger::zeta_power(p, k); }

}  // namespace

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1) == std::vector<Integer>{-1, 1});
  CHECK(cyclotomic_polynomial(4) == std::vector<Integer>{1, 0, 1});
  CHECK(cyclotomic_polynomial(6) == std::vector<Integer>{1, -1, 1});
}

TEST_CASE("ring axioms") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 50; ++t) {
    auto a = random_cyc(5, rng), b = random_cyc(5, rng), c = random_cyc(5, rng);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    auto x = random_bi(3, 4, rng), y = random_bi(3, 4, rng), w = random_bi(3, 4, rng);
    CHECK((x * y) * w == x * (y * w));
    CHECK(x * (y + w) == x * y + x * w);
  }
  CHECK(z(5, 5) == CyclotomicInteger::from_integer(5, 1));
  CHECK(z(3, 1) + z(3, 2) == CyclotomicInteger::from_integer(3, -1));
}

TEST_CASE("pi valuation") {
  CHECK(pi_valuation(CyclotomicInteger::from_integer(3, 3)) == Valuation(make_rational(1)));
  CHECK(pi_valuation(CyclotomicInteger::from_integer(7, 7)) == Valuation(make_rational(1)));
  CHECK(pi_valuation(z(3, 1) - z(3, 2)) == Valuation(make_rational(1, 2)));
  CHECK(pi_valuation(CyclotomicInteger::from_integer(5, 1)) == Valuation(make_rational(0)));
  CHECK(pi_valuation(CyclotomicInteger(5)).is_infinite());
  std::mt19937_64 rng(9);
  for (int t = 0; t < 100; ++t) {
    auto a = random_cyc(5, rng), b = random_cyc(5, rng);
    if (a.is_zero() || b.is_zero()) continue;
    CHECK(pi_valuation(a * b).value() == pi_valuation(a).value() + pi_valuation(b).value());
  }
}

TEST_CASE("division by pi round trips") {
  std::mt19937_64 rng(13);
  CyclotomicInteger pi = CyclotomicInteger::from_integer(7, 1) - z(7, 1);
  for (int t = 0; t < 50; ++t) {
    auto a = random_cyc(7, rng);
    CHECK((a * pi).divide_by_pi() == a);
  }
}

TEST_CASE("local valuation") {
  std::mt19937_64 rng(17);
  for (unsigned long p : {3UL, 5UL, 7UL}) {
    auto model = LocalRingModel::lexicographic(p, 4);
    for (int t = 0; t < 100; ++t) {
      auto a = random_cyc(p, rng);
      if (a.is_zero()) continue;
      CHECK(local_valuation(BicyclotomicInteger::from_cyclotomic(a, 4), *model) == pi_valuation(a));
    }
  }
  auto model = LocalRingModel::lexicographic(5, 3);
  CHECK(local_valuation(BicyclotomicInteger::monomial(5, 3, 0, 1), *model) == Valuation(make_rational(0)));
  CHECK(local_valuation(BicyclotomicInteger(5, 3), *model).is_infinite());
}

TEST_CASE("series exp") {
  // S_k = -1 for all k gives 1 - T.
  std::vector<BicyclotomicInteger> sums(3, BicyclotomicInteger::from_integer(3, 1, -1));
  auto L = series_exp(sums, 1, DegreeCheck::kVanishing);
  REQUIRE(L.size() == 2);
  CHECK(L[1] == BicyclotomicInteger::from_integer(3, 1, -1));
  // S_k = -(2^k + 3^k) gives (1 - 2T)(1 - 3T).
  std::vector<BicyclotomicInteger> s2;
  long a = 1, b = 1;
  for (int k = 1; k <= 3; ++k) {
    a *= 2;
    b *= 3;
    s2.push_back(BicyclotomicInteger::from_integer(5, 1, -(a + b)));
  }
  auto L2 = series_exp(s2, 2, DegreeCheck::kVanishing);
  CHECK(L2[1] == BicyclotomicInteger::from_integer(5, 1, -5));
  CHECK(L2[2] == BicyclotomicInteger::from_integer(5, 1, 6));
}

TEST_CASE("newton polygon of an L-polynomial") {
  LPolynomial L;
  L.p = 3;
  L.coeffs = {BicyclotomicInteger::from_integer(3, 1, 1), BicyclotomicInteger::from_integer(3, 1, -1)};
  CHECK(newton_polygon(L) == Polygon::from_segments({{make_rational(0), make_rational(1)}}));
  L.coeffs[1] = BicyclotomicInteger::from_cyclotomic(z(3, 1) - z(3, 2), 1);
  CHECK(newton_polygon(L) == Polygon::from_segments({{make_rational(1, 2), make_rational(1)}}));
}
