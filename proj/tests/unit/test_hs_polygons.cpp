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

#include "doctest.h"
#include "hsnp/errors.hpp"
#include "hsnp/hs_polygons.hpp"

using namespace hsnp;

namespace {

Rational q(long n, long d = 1) { return make_rational(n, d); }

}  // namespace

TEST_CASE("hs polygon examples") {
  CHECK(hs_polygon({1, 1, 3, 2}) == Polygon::from_segments({{q(0), q(1)}, {q(1, 2), q(4)}, {q(1), q(1)}}));
  CHECK(hs_polygon({1, 1, 3, 1}) == hodge_polygon(3, 3));
  CHECK(hs_polygon({1, 0, 2, 1}) == Polygon::from_segments({{q(1, 2), q(1)}}));
  CHECK_THROWS_AS(hs_polygon({1, 1, 4, 2}), InvalidResidueError);
}

TEST_CASE("hodge polygon") {
  CHECK(hodge_polygon(2, 2) == Polygon::from_segments({{q(0), q(1)}, {q(1, 2), q(2)}, {q(1), q(1)}}));
  CHECK(hodge_polygon(1, 1) == Polygon::from_segments({{q(0), q(1)}, {q(1), q(1)}}));
  CHECK(hodge_polygon(3, 0) == Polygon::from_segments({{q(1, 3), q(1)}, {q(2, 3), q(1)}}));
}

TEST_CASE("twisted hs polygon") {
  CHECK(twisted_hs_polygon(2, 1, 3, 2, 1) ==
        Polygon::from_segments({{q(1, 4), q(1)}, {q(1, 2), q(1)}, {q(3, 4), q(1)}}));
  // r = 0: slopes 1/d1..d1/d1 and 0/d2..(d2-1)/d2.
  CHECK(twisted_hs_polygon(2, 2, 3, 2, 0) ==
        Polygon::from_segments({{q(0), q(1)}, {q(1, 2), q(2)}, {q(1), q(1)}}));
}

TEST_CASE("hs split identity") {
  CHECK(hs_split_identity({1, 1, 3, 2}));
  CHECK(hs_split_identity({2, 1, 4, 3}));
  for (long s = 1; s <= 12; ++s)
    for (long nu = 1; nu < std::max<long>(s, 2); ++nu) {
      if (std::gcd(nu, s) != 1) continue;
      for (long d1 = 1; d1 <= 3; ++d1)
        for (long d2 = 0; d2 <= 2; ++d2) CHECK(hs_split_identity({d1, d2, s, nu}));
    }
  CHECK(hs_polygon({2, 1, 1, 1}) == twisted_hs_polygon(2, 1, 1, 1, 0));
}

TEST_CASE("hs structure") {
  for (long s = 1; s <= 24; ++s)
    for (long nu = 1; nu < std::max<long>(s, 2); ++nu) {
      if (std::gcd(nu, s) != 1) continue;
      for (long d1 = 1; d1 <= 3; ++d1)
        for (long d2 = 0; d2 <= 2; ++d2) {
          Polygon hs = hs_polygon({d1, d2, s, nu});
          Polygon hp = hodge_polygon(s * d1, s * d2);
          CHECK(hs.length() == (d2 > 0 ? s * (d1 + d2) : s * d1 - 1));
          CHECK(lies_above(hs, hp));
          CHECK((hs == hp) == (s == 1 || nu == 1));
        }
    }
}

TEST_CASE("coincidence predicate") {
  CHECK(coincidence_predicate(13, {3, 0, 2, 1}));
  CHECK(coincidence_predicate(7, {1, 1, 3, 1}));
  CHECK_FALSE(coincidence_predicate(5, {1, 1, 3, 2}));
  CHECK_THROWS_AS(coincidence_predicate(3, {3, 0, 2, 1}), InputError);
}

TEST_CASE("delta bound and generic vertices") {
  CHECK(twisted_delta_bound(0, 1, 1, 5, 1, 0, 1).value == 0);
  CHECK(twisted_delta_bound(1, 1, 1, 5, 1, 0, 1).value == 0);
  CHECK(gnp_vertices(0, 1, 1, 7, 1, 0, 1).s_k == 0);
  // epsilon is bounded by k / (p - 1) and the limit matches the delta bound.
  for (unsigned long p : {7UL, 13UL, 19UL})
    for (long k = 1; k <= 2; ++k) {
      auto v = gnp_vertices(k, 2, 1, p, 1, 1, 3);
      CHECK(v.epsilon >= 0);
      CHECK(v.epsilon <= make_rational(k, static_cast<long>(p) - 1));
      CHECK(v.limit == twisted_delta_bound(k, 2, 1, p, 1, 1, 3).value);
    }
  CHECK_THROWS_AS(gnp_vertices(4, 2, 1, 7, 1, 1, 3), OutOfRangeError);
}
