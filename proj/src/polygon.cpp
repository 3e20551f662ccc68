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

#include "hsnp/polygon.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "hsnp/errors.hpp"

namespace hsnp {

Polygon Polygon::from_segments(std::vector<Segment> segments) {
  for (const auto& seg : segments) {
    if (sgn(seg.length) < 0) throw InputError("segment with negative length");
  }
  std::erase_if(segments, [](const Segment& s) { return sgn(s.length) == 0; });
  std::stable_sort(segments.begin(), segments.end(),
                   [](const Segment& a, const Segment& b) { return a.slope < b.slope; });
  Polygon out;
  for (auto& seg : segments) {
    if (!out.segments_.empty() && out.segments_.back().slope == seg.slope) {
      out.segments_.back().length += seg.length;
    } else {
      out.segments_.push_back(std::move(seg));
    }
  }
  return out;
}

Polygon Polygon::from_valuations(std::span<const ValuationPoint> points) {
  std::vector<std::pair<long, Rational>> finite;
  std::set<long> seen;
  bool has_zero = false;
  for (const auto& pt : points) {
    if (!seen.insert(pt.index).second)
      throw DegenerateInputError("repeated abscissa " + std::to_string(pt.index));
    if (pt.index == 0) has_zero = true;
    if (pt.valuation.is_finite()) finite.emplace_back(pt.index, pt.valuation.value());
  }
  if (!has_zero) throw DegenerateInputError("valuation points must include index 0");
  if (finite.size() < 2) throw DegenerateInputError("need at least two finite points for a hull");
  std::sort(finite.begin(), finite.end(), [](const auto& a, const auto& b) { return a.first < b.first; });

  // Monotone chain, lower hull only. Collinear points are dropped.
  std::vector<std::pair<long, Rational>> hull;
  for (const auto& pt : finite) {
    while (hull.size() >= 2) {
      const auto& o = hull[hull.size() - 2];
      const auto& a = hull.back();
      // Keep a only if it lies strictly below the chord o -> pt.
      Rational lhs = (a.second - o.second) * (pt.first - o.first);
      Rational rhs = (pt.second - o.second) * (a.first - o.first);
      if (lhs >= rhs) {
        hull.pop_back();
      } else {
        break;
      }
    }
    hull.push_back(pt);
  }
  std::vector<Segment> segs;
  for (std::size_t i = 1; i < hull.size(); ++i) {
    Rational dx(hull[i].first - hull[i - 1].first);
    Rational slope = (hull[i].second - hull[i - 1].second) / dx;
    segs.push_back({slope, dx});
  }
  return from_segments(std::move(segs));
}

Rational Polygon::length() const {
  Rational total = 0;
  for (const auto& s : segments_) total += s.length;
  return total;
}

Rational Polygon::height() const {
  Rational total = 0;
  for (const auto& s : segments_) total += s.slope * s.length;
  return total;
}

std::vector<Vertex> Polygon::vertices() const {
  std::vector<Vertex> out;
  out.push_back({Rational(0), Rational(0)});
  Rational x = 0, y = 0;
  for (const auto& s : segments_) {
    x += s.length;
    y += s.slope * s.length;
    out.push_back({x, y});
  }
  return out;
}

Rational Polygon::height_at(const Rational& x) const {
  if (sgn(x) < 0 || x > length()) throw OutOfRangeError("abscissa " + x.get_str() + " outside polygon");
  Rational cx = 0, cy = 0;
  for (const auto& s : segments_) {
    if (x <= cx + s.length) return cy + s.slope * (x - cx);
    cx += s.length;
    cy += s.slope * s.length;
  }
  return cy;
}

std::vector<Rational> Polygon::unit_slopes() const {
  std::vector<Rational> out;
  for (const auto& s : segments_) {
    if (s.length.get_den() != 1) throw InputError("unit_slopes needs integral segment lengths");
    for (Integer i = 0; i < s.length.get_num(); ++i) out.push_back(s.slope);
  }
  return out;
}

std::string Polygon::str() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < segments_.size(); ++i) {
    if (i) os << ", ";
    os << '(' << segments_[i].slope.get_str() << ", " << segments_[i].length.get_str() << ')';
  }
  os << ']';
  return os.str();
}

Polygon concat(const Polygon& a, const Polygon& b) {
  std::vector<Segment> segs = a.segments();
  segs.insert(segs.end(), b.segments().begin(), b.segments().end());
  return Polygon::from_segments(std::move(segs));
}

namespace {

std::vector<Rational> breakpoints(const Polygon& a, const Polygon& b) {
  std::vector<Rational> xs;
  for (const auto& v : a.vertices()) xs.push_back(v.x);
  for (const auto& v : b.vertices()) xs.push_back(v.x);
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

}  // namespace

bool lies_above(const Polygon& a, const Polygon& b) {
  if (a.length() != b.length())
    throw IncomparableError("polygons of length " + a.length().get_str() + " and " + b.length().get_str());
  if (a.height() != b.height()) return false;
  // Both are piecewise linear, so checking the union of breakpoints suffices.
  for (const auto& x : breakpoints(a, b)) {
    if (a.height_at(x) < b.height_at(x)) return false;
  }
  return true;
}

Polygon scale(const Polygon& a, const Rational& c) {
  if (sgn(c) <= 0) throw InputError("scale factor must be positive");
  std::vector<Segment> segs = a.segments();
  for (auto& s : segs) s.length *= c;
  return Polygon::from_segments(std::move(segs));
}

Rational max_vertex_gap(const Polygon& a, const Polygon& b) {
  if (a.length() != b.length())
    throw IncomparableError("polygons of length " + a.length().get_str() + " and " + b.length().get_str());
  Rational gap = 0;
  for (const auto& x : breakpoints(a, b)) {
    Rational d = a.height_at(x) - b.height_at(x);
    if (d > gap) gap = d;
  }
  return gap;
}

}  // namespace hsnp
