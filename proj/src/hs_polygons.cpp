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

#include "hsnp/hs_polygons.hpp"

#include <algorithm>
#include <numeric>

#include "hsnp/errors.hpp"
#include "hsnp/residue_cycles.hpp"

namespace hsnp {

namespace {

void check_degrees(long d1, long d2) {
  if (d1 < 1) throw InputError("d1 must be >= 1");
  if (d2 < 0) throw InputError("d2 must be >= 0");
}

// Both slope families for one lambda, each segment of length len.
std::vector<Segment> families(long d1, long d2, const Rational& lambda, const Rational& len) {
  std::vector<Segment> segs;
  for (long m = 0; m < d1; ++m) segs.push_back({(Rational(m + 1) - lambda) / d1, len});
  for (long m = 0; m < d2; ++m) segs.push_back({(Rational(m) + lambda) / d2, len});
  return segs;
}

void remove_unit(std::vector<Segment>& segs, const Rational& slope) {
  for (auto it = segs.begin(); it != segs.end(); ++it) {
    if (it->slope == slope) {
      it->length -= 1;
      if (it->length == 0) segs.erase(it);
      return;
    }
  }
  throw ConsistencyError("no segment of slope " + slope.get_str() + " to remove");
}

}  // namespace

Polygon hs_polygon(const HSParams& params) {
  check_degrees(params.d1, params.d2);
  auto dec = cycle_decomposition(params.s, params.nu);
  std::vector<Segment> segs;
  for (const auto& cyc : dec.cycles()) {
    auto f = families(params.d1, params.d2, cyc.lambda, Rational(static_cast<long>(cyc.length())));
    segs.insert(segs.end(), f.begin(), f.end());
  }
  if (params.d2 == 0) {
    auto poly = Polygon::from_segments(std::move(segs));
    std::vector<Segment> merged = poly.segments();
    remove_unit(merged, Rational(1));
    return Polygon::from_segments(std::move(merged));
  }
  return Polygon::from_segments(std::move(segs));
}

Polygon twisted_hs_polygon(long d1, long d2, long s, long nu, long r, OnePoleMode mode) {
  check_degrees(d1, d2);
  auto dec = cycle_decomposition(s, nu);
  const Rational& lambda = dec.cycle_of(r).lambda;
  auto segs = families(d1, d2, lambda, Rational(1));
  if (d2 == 0) {
    if (mode == OnePoleMode::kDropFirstSegment) {
      auto poly = Polygon::from_segments(std::move(segs));
      std::vector<Segment> merged = poly.segments();
      remove_unit(merged, merged.front().slope);
      return Polygon::from_segments(std::move(merged));
    }
    if (lambda == 0) remove_unit(segs, Rational(1));
  }
  return Polygon::from_segments(std::move(segs));
}

Polygon hodge_polygon(long D1, long D2) {
  check_degrees(D1, D2);
  std::vector<Segment> segs;
  for (long m = 1; m < D1; ++m) segs.push_back({make_rational(m, D1), Rational(1)});
  if (D2 > 0) {
    segs.push_back({Rational(0), Rational(1)});
    segs.push_back({Rational(1), Rational(1)});
    for (long m = 1; m < D2; ++m) segs.push_back({make_rational(m, D2), Rational(1)});
  }
  for (auto& seg : segs) seg.slope.canonicalize();
  return Polygon::from_segments(std::move(segs));
}

bool hs_split_identity(const HSParams& params, OnePoleMode mode) {
  auto dec = cycle_decomposition(params.s, params.nu);
  Polygon total;
  for (const auto& cyc : dec.cycles()) {
    Polygon tw = twisted_hs_polygon(params.d1, params.d2, params.s, params.nu, cyc.elements.front(), mode);
    for (std::size_t i = 0; i < cyc.length(); ++i) total = concat(total, tw);
  }
  return total == hs_polygon(params);
}

bool coincidence_predicate(unsigned long p, const HSParams& params) {
  check_degrees(params.d1, params.d2);
  if (!is_prime(p)) throw InputError(std::to_string(p) + " is not prime");
  std::uint64_t sd1 = static_cast<std::uint64_t>(params.s * params.d1);
  std::uint64_t guard = sd1 * static_cast<std::uint64_t>(std::max<long>(params.d2, 1));
  if (gcd_u64(p, guard) != 1) throw InputError("p divides s*d1*d2");
  if (params.d2 == 0) return params.d1 == 1 || p % sd1 == 1 % sd1;
  std::uint64_t m = lcm_u64(sd1, static_cast<std::uint64_t>(params.s * params.d2));
  return p % m == 1 % m;
}

namespace {

struct Pick {
  Rational value;
  int family;
  long m;
};

// k smallest elements of L_t, ties toward family 1.
std::vector<Pick> smallest(long k, long d1, long d2, unsigned long p, unsigned long digit) {
  std::vector<Pick> all;
  Rational shift = make_rational(static_cast<long>(digit), static_cast<long>(p - 1));
  for (long m = 1; m <= k; ++m) all.push_back({(Rational(m) - shift) / d1, 1, m});
  if (d2 > 0)
    for (long m = 0; m < k; ++m) all.push_back({(Rational(m) + shift) / d2, 2, m});
  std::stable_sort(all.begin(), all.end(), [](const Pick& a, const Pick& b) {
    if (a.value != b.value) return a.value < b.value;
    return a.family < b.family;
  });
  all.resize(static_cast<std::size_t>(k));
  return all;
}

long residue(long x, long d) { return static_cast<long>(mod_floor(x, static_cast<std::uint64_t>(d))); }

// min over permutations rho of sum_i r(i, rho(i)).
long min_residue_sum(const std::vector<long>& rows, const std::vector<long>& cols, long p, long shift, long d) {
  if (rows.empty()) return 0;
  std::vector<long> perm = cols;
  std::sort(perm.begin(), perm.end());
  long best = -1;
  do {
    long total = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) total += residue(-(p * rows[i] - (perm[i] + shift)), d);
    if (best < 0 || total < best) best = total;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace

DeltaBound twisted_delta_bound(long k, long d1, long d2, unsigned long p, unsigned a, long r, long s) {
  check_degrees(d1, d2);
  if (k < 0 || k > d1 + d2) throw OutOfRangeError("k outside [0, d1 + d2]");
  auto digits = digit_lambda(p, a, r, s);
  DeltaBound out;
  out.value = 0;
  for (unsigned t = 0; t < a; ++t) {
    auto picks = smallest(k, d1, d2, p, digits.digits[t]);
    long k1 = 0, k2 = 0;
    for (const auto& pk : picks) {
      out.value += pk.value;
      (pk.family == 1 ? k1 : k2) += 1;
    }
    out.k1.push_back(k1);
    out.k2.push_back(k2);
  }
  out.value /= a;
  out.uniform_split = std::adjacent_find(out.k1.begin(), out.k1.end(), std::not_equal_to<>()) == out.k1.end();
  if (out.uniform_split) {
    long k1 = out.k1.front(), k2 = out.k2.front();
    const Rational& lam = digits.lambda;
    out.closed_form = make_rational(k1 * (k1 - 1), 2 * d1) + Rational(k1) * (1 - lam) / d1;
    if (d2 > 0) out.closed_form += make_rational(k2 * (k2 - 1), 2 * d2) + Rational(k2) * lam / d2;
    out.closed_form.canonicalize();
    if (out.closed_form != out.value) throw ConsistencyError("delta closed form disagrees with direct sum");
  }
  return out;
}

GnpVertex gnp_vertices(long k, long d1, long d2, unsigned long p, unsigned a, long r, long s) {
  auto delta = twisted_delta_bound(k, d1, d2, p, a, r, s);
  auto digits = digit_lambda(p, a, r, s);
  GnpVertex out;
  out.k1 = delta.k1;
  out.k2 = delta.k2;
  out.limit = delta.value;
  Rational total = 0;
  long pl = static_cast<long>(p);
  for (unsigned t = 0; t < a; ++t) {
    long k1 = delta.k1[t], k2 = delta.k2[t];
    if (k1 > d1 || k2 > d2) throw OutOfRangeError("vertex split exceeds (d1, d2)");
    long kt = static_cast<long>(digits.digits[t]);
    std::vector<long> rows1(static_cast<std::size_t>(k1)), rows2(static_cast<std::size_t>(k2));
    std::iota(rows1.begin(), rows1.end(), 1);
    std::iota(rows2.begin(), rows2.end(), 0);
    Rational s1 = make_rational(k1 * (k1 + 1), 2 * d1) - make_rational(k1 * kt, d1 * (pl - 1)) +
                  make_rational(min_residue_sum(rows1, rows1, pl, kt, d1), d1 * (pl - 1));
    total += s1;
    if (k2 > 0) {
      Rational s2 = make_rational(k2 * (k2 - 1), 2 * d2) + make_rational(k2 * kt, d2 * (pl - 1)) +
                    make_rational(min_residue_sum(rows2, rows2, pl, -kt, d2), d2 * (pl - 1));
      total += s2;
    }
  }
  out.s_k = total / a;
  out.s_k.canonicalize();
  out.epsilon = out.s_k - out.limit;
  return out;
}

}  // namespace hsnp
