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


#include <numeric>
#include <random>

#include "doctest.h"
#include "hsnp/errors.hpp"
#include "hsnp/finite_field.hpp"

using namespace hsnp;

TEST_CASE("field construction") {
  auto F3 = GaloisField::get(3, 1);
  CHECK(F3->order() == 3);
  auto F9 = GaloisField::get(3, 2);
  // Lexicographically first irreducible monic quadratic over F_3 is x^2 + 1.
  CHECK(F9->modulus() == FpPoly{1, 0, 1});
  CHECK_THROWS_AS(GaloisField(4, 1), InputError);
  CHECK_THROWS_AS(GaloisField(3, 20, 1000), SizeCapError);
  auto again = GaloisField(3, 2);
  CHECK(again.modulus() == F9->modulus());
  CHECK(again.generator_code() == F9->generator_code());
}

TEST_CASE("field arithmetic") {
  auto F = GaloisField::get(5, 3);
  std::mt19937_64 rng(7);
  for (int t = 0; t < 200; ++t) {
    auto x = F->decode(rng() % F->order());
    auto y = F->decode(rng() % F->order());
    CHECK(F->mul(x, y) == F->mul(y, x));
    CHECK(F->trace(F->frobenius(x)) == F->trace(x));
    CHECK((F->trace(F->add(x, y)) + 0U) % 5 == (F->trace(x) + F->trace(y)) % 5);
    if (!F->is_zero(x)) {
      CHECK(F->mul(x, F->inv(x)) == F->one());
      CHECK(F->generator_power(F->dlog(x)) == x);
    }
  }
  CHECK(F->dlog(F->one()) == 0);
  CHECK(F->dlog(F->generator()) == 1);
  CHECK_THROWS_AS(F->dlog(F->zero()), DomainError);
  CHECK_THROWS_AS(F->inv(F->zero()), DomainError);
  CHECK(F->trace(F->zero()) == 0);
  CHECK(GaloisField::get(3, 2)->trace(GaloisField::get(3, 2)->one()) == 2);
}

TEST_CASE("tower norm and characters") {
  FieldTower T(5, 2, 2);
  const auto& top = T.top();
  const auto& base = T.base();
  CHECK(T.norm_to_subfield(top.one()) == base.one());
  auto Ng = T.norm_to_subfield(top.generator());
  CHECK(base.pow(Ng, 24) == base.one());
  CHECK(std::gcd<std::uint64_t>(base.dlog(Ng), 24) == 1);
  std::mt19937_64 rng(3);
  for (int t = 0; t < 200; ++t) {
    auto x = top.decode(1 + rng() % (top.order() - 1));
    auto y = top.decode(1 + rng() % (top.order() - 1));
    CHECK(T.norm_to_subfield(top.mul(x, y)) == base.mul(T.norm_to_subfield(x), T.norm_to_subfield(y)));
    CHECK((T.chi_exponent(x, 4) + T.chi_exponent(y, 4)) % 4 == T.chi_exponent(top.mul(x, y), 4));
  }
  CHECK(T.chi_exponent(top.one(), 3) == 0);
  CHECK_THROWS_AS(T.chi_exponent(top.one(), 5), DivisibilityError);
}

TEST_CASE("trace transitivity") {
  FieldTower T(3, 2, 2);
  auto Fq = GaloisField::get(3, 2);
  std::mt19937_64 rng(11);
  for (int t = 0; t < 100; ++t) {
    auto x = Fq->decode(rng() % Fq->order());
    // Tr_{q^2/p}(embed x) = 2 Tr_{q/p}(x).
    CHECK(T.trace_to_prime(T.embed(x)) == (2 * Fq->trace(x)) % 3);
  }
}
