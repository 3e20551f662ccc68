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

#ifndef HSNP_HS_POLYGONS_HPP
#define HSNP_HS_POLYGONS_HPP

#include <vector>

#include "hsnp/arith.hpp"
#include "hsnp/polygon.hpp"

namespace hsnp {

struct HSParams {
  long d1 = 1;
  long d2 = 0;
  long s = 1;
  long nu = 1;
};

/// How the one-pole (d2 = 0) twisted polygon loses a segment.
enum class OnePoleMode {
  /// Drop the unit-slope segment, only for the trivial character (lambda = 0).
  /// Matches the affine-line sums, and makes the split identity hold.
  kDropUnitSlope,
  /// Always drop the smallest-slope segment; length d1 - 1 for every r.
  kDropFirstSegment,
};

Polygon hs_polygon(const HSParams& params);

Polygon twisted_hs_polygon(long d1, long d2, long s, long nu, long r,
                           OnePoleMode mode = OnePoleMode::kDropUnitSlope);

/// Slopes 0, 1, m/D1, m/D2 each of length 1. For D2 = 0 the one-pole
/// version 1/D1, ..., (D1-1)/D1 is returned.
Polygon hodge_polygon(long D1, long D2);

bool hs_split_identity(const HSParams& params, OnePoleMode mode = OnePoleMode::kDropUnitSlope);

/// Throws InputError unless gcd(p, s*d1*max(d2,1)) = 1.
bool coincidence_predicate(unsigned long p, const HSParams& params);

struct DeltaBound {
  /// (1/a) sum_t delta_t^(k).
  Rational value;
  /// Per-digit split of the k smallest elements (family 1, family 2).
  std::vector<long> k1;
  std::vector<long> k2;
  /// Closed form, filled when the split does not depend on t.
  bool uniform_split = false;
  Rational closed_form;
};

DeltaBound twisted_delta_bound(long k, long d1, long d2, unsigned long p, unsigned a, long r, long s);

struct GnpVertex {
  Rational s_k;
  std::vector<long> k1;
  std::vector<long> k2;
  /// s_k - limit; nonnegative, at most k/(p-1).
  Rational epsilon;
  /// The large-p value, equal to twisted_delta_bound(k, ...).value.
  Rational limit;
};

GnpVertex gnp_vertices(long k, long d1, long d2, unsigned long p, unsigned a, long r, long s);

}  // namespace hsnp

#endif  // HSNP_HS_POLYGONS_HPP
