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
#include <set>

#include "doctest.h"
#include "hsnp/errors.hpp"
#include "hsnp/residue_cycles.hpp"

using namespace hsnp;

TEST_CASE("cycle decompositions") {
  auto d = cycle_decomposition(5, 3);
  REQUIRE(d.cycles().size() == 2);
  CHECK(d.cycles()[0].elements == std::vector<long>{0});
  CHECK(d.cycles()[1].elements == std::vector<long>{1, 3, 4, 2});
  CHECK(d.cycles()[1].lambda == make_rational(1, 2));

  auto id = cycle_decomposition(3, 1);
  REQUIRE(id.cycles().size() == 3);
  CHECK(id.cycle_of(1).lambda == make_rational(1, 3));
  CHECK(id.cycle_of(2).lambda == make_rational(2, 3));

  auto d4 = cycle_decomposition(4, 3);
  CHECK(d4.cycles().size() == 3);
  CHECK(d4.cycle_of(1).elements == std::vector<long>{1, 3});
  CHECK(d4.cycle_of(2).lambda == make_rational(1, 2));

  CHECK_THROWS_AS(cycle_decomposition(4, 2), InvalidResidueError);
}

TEST_CASE("lambda pairing and orbit invariance") {
  for (long s = 1; s <= 60; ++s)
    for (long nu = 1; nu < std::max<long>(s, 2); ++nu) {
      if (std::gcd(nu, s) != 1) continue;
      auto d = cycle_decomposition(s, nu);
      std::size_t total = 0;
      std::multiset<Rational> lams;
      for (const auto& c : d.cycles()) {
        total += c.length();
        lams.insert(c.lambda);
        long neg = (s - c.elements.front()) % s;
        if (c.elements.front() != 0) CHECK(d.cycle_of(neg).lambda == Rational(1) - c.lambda);
      }
      CHECK(total == static_cast<std::size_t>(s));
      // Another generator of the same cyclic group.
      long ord = 1;
      for (long x = nu % s; s > 1 && x != 1; x = x * nu % s) ++ord;
      long k = 1;
      for (long c = 2; c < ord; ++c)
        if (std::gcd(c, ord) == 1) {
          k = c;
          break;
        }
      long nu2 = 1;
      for (long i = 0; i < k; ++i) nu2 = nu2 * nu % std::max<long>(s, 1);
      if (s > 1) {
        std::multiset<Rational> lams2;
        auto d2 = cycle_decomposition(s, nu2);
        for (const auto& c : d2.cycles()) lams2.insert(c.lambda);
        CHECK(lams == lams2);
      }
    }
}

TEST_CASE("refinement by powers") {
  auto d = cycle_decomposition(5, 3);
  auto r2 = refine_by_power(d, 2);
  CHECK(r2[1].sublength == 2);
  CHECK(r2[1].subcycles == std::vector<std::vector<long>>{{1, 4}, {2, 3}});
  auto r4 = refine_by_power(d, 4);
  CHECK(r4[1].sublength == 1);
  CHECK(r4[1].subcycles.size() == 4);
  auto r1 = refine_by_power(d, 1);
  CHECK(r1[1].subcycles.size() == 1);
}

TEST_CASE("digit lambda") {
  auto a = digit_lambda(3, 1, 1, 2);
  CHECK(a.digits == std::vector<unsigned long>{1});
  CHECK(a.lambda == make_rational(1, 2));
  auto b = digit_lambda(3, 2, 1, 4);
  CHECK(b.digits == std::vector<unsigned long>{2, 0});
  CHECK(b.lambda == make_rational(1, 2));
  CHECK(digit_lambda(7, 3, 0, 9).lambda == 0);
  CHECK_THROWS_AS(digit_lambda(3, 1, 1, 4), DivisibilityError);
  // Agrees with the cycle invariant.
  for (unsigned long p : {3UL, 5UL, 7UL, 11UL})
    for (long s = 2; s <= 12; ++s) {
      if (s % static_cast<long>(p) == 0) continue;
      auto dec = cycle_decomposition(s, static_cast<long>(p % s));
      unsigned a = 1;
      std::uint64_t pa = p;
      while ((pa - 1) % static_cast<std::uint64_t>(s) != 0) {
        pa *= p;
        ++a;
      }
      for (long r = 0; r < s; ++r) CHECK(digit_lambda(p, a, r, s).lambda == dec.cycle_of(r).lambda);
    }
}
