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


#include <vector>

#include "doctest.h"
#include "hsnp/errors.hpp"
#include "hsnp/polygon.hpp"

using namespace hsnp;

namespace {

Rational q(long n, long d = 1) { return make_rational(n, d); }

Polygon poly(std::vector<Segment> segs) { return Polygon::from_segments(std::move(segs)); }

Polygon hull(const std::vector<ValuationPoint>& pts) { return Polygon::from_valuations(pts); }

}  // namespace

TEST_CASE("lower hull from valuations") {
  CHECK(hull({{0, Valuation(q(0))}, {1, Valuation(q(1, 2))}, {2, Valuation(q(2))}}) ==
        poly({{q(1, 2), q(1)}, {q(3, 2), q(1)}}));
  CHECK(hull({{0, Valuation(q(0))}, {1, Valuation(q(1))}, {2, Valuation(q(1))}}) == poly({{q(1, 2), q(2)}}));
  CHECK(hull({{0, Valuation(q(0))}, {1, Valuation::infinity()}, {2, Valuation(q(1))}}) == poly({{q(1, 2), q(2)}}));
  CHECK_THROWS_AS(hull({{0, Valuation(q(0))}, {1, Valuation::infinity()}}), DegenerateInputError);
}

TEST_CASE("box sum merges and sorts") {
  CHECK(concat(poly({{q(0), q(1)}}), poly({{q(1), q(1)}})) == poly({{q(0), q(1)}, {q(1), q(1)}}));
  CHECK(concat(poly({{q(1, 2), q(2)}}), poly({{q(1, 2), q(1)}})) == poly({{q(1, 2), q(3)}}));
  CHECK(concat(poly({{q(1), q(1)}}), poly({{q(0), q(2)}})) == poly({{q(0), q(2)}, {q(1), q(1)}}));
}

TEST_CASE("dominance") {
  Polygon a = poly({{q(0), q(1)}, {q(1), q(1)}});
  Polygon b = poly({{q(1, 2), q(2)}});
  CHECK(lies_above(a, a));
  CHECK(lies_above(b, a));
  CHECK_FALSE(lies_above(a, b));
  CHECK_THROWS_AS(lies_above(a, poly({{q(0), q(3)}})), IncomparableError);
  CHECK(max_vertex_gap(b, a) == q(1, 2));
  CHECK(max_vertex_gap(a, b) == 0);
}

TEST_CASE("scaling and heights") {
  CHECK(scale(poly({{q(1, 2), q(2)}}), q(1, 2)) == poly({{q(1, 2), q(1)}}));
  Polygon p = poly({{q(0), q(1)}, {q(1, 2), q(4)}, {q(1), q(1)}});
  CHECK(p.length() == q(6));
  CHECK(p.height() == q(3));
  CHECK(p.height_at(q(3)) == q(1));
  CHECK(p.vertices().size() == 4);
}
