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

// Lower-convex polygons stored as (slope, horizontal length) segments.
//
// Newton, Hodge and Hodge-Stickelberger polygons are all values of this
// type. Segments are kept in canonical form: slopes strictly increasing,
// equal slopes merged, every length positive. Structural equality is then
// polygon equality. Lengths are rational so that polygons may be rescaled;
// comparisons are exact throughout.

#ifndef HSNP_POLYGON_HPP
#define HSNP_POLYGON_HPP

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hsnp/arith.hpp"

namespace hsnp {

struct Segment {
  Rational slope;
  Rational length;

  friend bool operator==(const Segment&, const Segment&) = default;
};

struct Vertex {
  Rational x;
  Rational y;
};

/// (abscissa, valuation) input point for hull construction.
struct ValuationPoint {
  long index;
  Valuation valuation;
};

class Polygon {
 public:
  Polygon() = default;

  /// Canonicalizes: sorts by slope, merges equal slopes, drops empty segments.
  /// Throws InputError on a negative length.
  static Polygon from_segments(std::vector<Segment> segments);

  /// Lower convex hull of the finite points, anchored at the smallest index.
  /// Throws DegenerateInputError with fewer than two finite points, a missing
  /// index 0, or repeated indices.
  static Polygon from_valuations(std::span<const ValuationPoint> points);

  const std::vector<Segment>& segments() const { return segments_; }
  bool empty() const { return segments_.empty(); }

  Rational length() const;
  /// Height at the right endpoint (left endpoint is at height 0).
  Rational height() const;
  std::vector<Vertex> vertices() const;
  /// Height at abscissa x, 0 <= x <= length().
  Rational height_at(const Rational& x) const;
  /// Slope multiset expanded into unit-length pieces; requires integral lengths.
  std::vector<Rational> unit_slopes() const;

  std::string str() const;

  friend bool operator==(const Polygon&, const Polygon&) = default;

 private:
  std::vector<Segment> segments_;
};

/// Box-sum: multiset union of segments, re-sorted and merged.
Polygon concat(const Polygon& a, const Polygon& b);

/// The "lies over, endpoints meet" relation. Throws IncomparableError when
/// total lengths differ; returns false when endpoint heights differ.
bool lies_above(const Polygon& a, const Polygon& b);

/// Multiplies every horizontal length by c (> 0); slopes are unchanged.
Polygon scale(const Polygon& a, const Rational& c);

/// max over breakpoints of (a - b); a and b must have equal total length.
Rational max_vertex_gap(const Polygon& a, const Polygon& b);

}  // namespace hsnp

#endif  // HSNP_POLYGON_HPP
