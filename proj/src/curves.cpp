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

#include "hsnp/curves.hpp"

#include <map>

#include "hsnp/errors.hpp"
#include "hsnp/finite_field.hpp"
#include "hsnp/hs_polygons.hpp"

namespace hsnp {

long ASCurve::genus() const {
  const long p1 = static_cast<long>(P.p) - 1;
  if (P.d2 > 0) return p1 * s * (P.d1 + P.d2) / 2;
  return p1 * (s * P.d1 - 1) / 2;
}

std::vector<Integer> as_point_counts(const ASCurve& curve, unsigned kmax, std::uint64_t cap) {
  const LaurentPolynomial& P = curve.P;
  if (curve.s < 1) throw InputError("s must be positive");
  std::vector<Integer> out;
  for (unsigned k = 1; k <= kmax; ++k) {
    FieldTower tower(P.p, P.a, k, cap);
    SumSpec spec;
    for (long i = -P.d2; i <= P.d1; ++i)
      if (P.coeff(i) != 0) spec.terms.emplace_back(i * curve.s, tower.embedded_log(P.coeff(i)));
    if (P.d2 == 0) {
      spec.affine = true;
      spec.affine_trace = tower.trace_to_prime(tower.embed(tower.base().decode(P.coeff(0))));
    }
    auto counts = enumerate_counts(tower.top(), spec);
    Integer zeros(static_cast<unsigned long>(counts[0]));
    out.push_back(Integer(P.p) * zeros + (P.d2 > 0 ? 2 : 1));
  }
  return out;
}

namespace {

unsigned numerator_sum_count(unsigned long p, unsigned a, long degree, std::uint64_t cap) {
  LOptions opt;
  opt.cap = cap;
  return direct_sum_count(p, a, degree, true, opt);
}

LPolynomial by_point_count(const ASCurve& curve, const LOptions& options) {
  const LaurentPolynomial& P = curve.P;
  const long D = 2 * curve.genus();
  LPolynomial L;
  L.p = P.p;
  L.a = P.a;
  if (D == 0) {
    L.coeffs = {BicyclotomicInteger::from_integer(P.p, 1, 1)};
    return L;
  }
  unsigned B = numerator_sum_count(P.p, P.a, D, options.cap);
  if (B == 0) throw SizeCapError("point counts beyond the cap " + std::to_string(options.cap));
  auto counts = as_point_counts(curve, B, options.cap);
  const Integer q(checked_pow(P.p, P.a));
  std::vector<BicyclotomicInteger> sums;
  Integer qk = 1;
  for (unsigned k = 0; k < B; ++k) {
    qk *= q;
    sums.push_back(BicyclotomicInteger::from_integer(P.p, 1, counts[k] - qk - 1));
  }
  L.coeffs = series_exp(sums, D, B > static_cast<unsigned>(D) ? DegreeCheck::kVanishing : DegreeCheck::kWeilNorm, q);
  return L;
}

LPolynomial by_character_product(const ASCurve& curve, const LOptions& options) {
  const LaurentPolynomial& P = curve.P;
  LPolynomial acc;
  for (unsigned long c = 1; c < P.p; ++c) {
    LPolynomial f = l_polynomial_routed(P.scaled(c), curve.s, curve.convention(), Route::kAuto, options).L;
    acc = c == 1 ? f : multiply(acc, f);
  }
  for (auto& x : acc.coeffs)
    if (!x.in_prime_subring()) throw ConsistencyError("character product leaves Z[zeta_p]");
  return acc;
}

}  // namespace

LPolynomial zeta_numerator(const ASCurve& curve, NumeratorMethod method, const LOptions& options) {
  return method == NumeratorMethod::kPointCount ? by_point_count(curve, options)
                                                : by_character_product(curve, options);
}

CurveReport curve_check(const ASCurve& curve, const LOptions& options) {
  CurveReport r;
  const LaurentPolynomial& P = curve.P;
  r.genus = curve.genus();
  LPolynomial a = zeta_numerator(curve, NumeratorMethod::kPointCount, options);
  LPolynomial b = zeta_numerator(curve, NumeratorMethod::kCharacterProduct, options);
  r.methods_agree = a.coeffs == b.coeffs;
  if (!r.methods_agree) throw ConsistencyError("point-count and character-product numerators differ");
  r.numerator = a;
  unsigned shown = std::max<unsigned>(1, static_cast<unsigned>(a.degree()));
  r.counts = as_point_counts(curve, shown, options.cap);
  r.newton = newton_polygon(a);
  r.scaled = scale(r.newton, make_rational(1, static_cast<long>(P.p) - 1));
  HSParams hp{P.d1, P.d2, curve.s, static_cast<long>(P.p % static_cast<unsigned long>(curve.s))};
  if (curve.s == 1) hp.nu = 1;
  r.hs = hs_polygon(hp);
  r.above = lies_above(r.scaled, r.hs);
  r.equal = r.scaled == r.hs;
  r.predicate = coincidence_predicate(P.p, hp);
  return r;
}

// ------------------------------------------------------------ Dickson

namespace {

QPoly trim(QPoly f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
  return f;
}

}  // namespace

QPoly dickson_poly(unsigned n, const Rational& c) {
  QPoly prev{Rational(2)};
  if (n == 0) return prev;
  QPoly cur{Rational(0), Rational(1)};
  for (unsigned k = 1; k < n; ++k) {
    QPoly next(cur.size() + 1, Rational(0));
    for (std::size_t i = 0; i < cur.size(); ++i) next[i + 1] += cur[i];
    for (std::size_t i = 0; i < prev.size(); ++i) next[i] -= c * prev[i];
    prev = std::move(cur);
    cur = trim(std::move(next));
  }
  return cur;
}

bool dickson_identity(unsigned n, const Rational& c) {
  QPoly d = dickson_poly(n, c);
  std::map<long, Rational> lhs;
  for (std::size_t k = 0; k < d.size(); ++k) {
    if (d[k] == 0) continue;
    // (u + c u^-1)^k = sum_j binom(k, j) c^j u^(k - 2j)
    Integer binom = 1;
    Rational cj = 1;
    for (std::size_t j = 0; j <= k; ++j) {
      lhs[static_cast<long>(k) - 2 * static_cast<long>(j)] += d[k] * Rational(binom) * cj;
      binom = binom * static_cast<unsigned long>(k - j) / static_cast<unsigned long>(j + 1);
      cj *= c;
    }
  }
  std::map<long, Rational> rhs;
  Rational cn = 1;
  for (unsigned i = 0; i < n; ++i) cn *= c;
  rhs[static_cast<long>(n)] += 1;
  rhs[-static_cast<long>(n)] += cn;
  auto clean = [](std::map<long, Rational>& m) {
    for (auto it = m.begin(); it != m.end();) it = it->second == 0 ? m.erase(it) : std::next(it);
  };
  clean(lhs);
  clean(rhs);
  return lhs == rhs;
}

std::vector<std::uint64_t> reduce_poly(const QPoly& f, unsigned long p) {
  std::vector<std::uint64_t> out;
  const Integer pz(p);
  for (const auto& c : f) {
    Integer den = c.get_den();
    if (den % pz == 0) throw ReductionError("denominator of " + to_string(c) + " is divisible by p");
    Integer inv;
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), pz.get_mpz_t());
    Integer v = c.get_num() * inv;
    mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), pz.get_mpz_t());
    out.push_back(v.get_ui());
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

bool is_global_permutation_sample(const QPoly& f, unsigned long p, unsigned level, std::uint64_t cap) {
  if (!is_prime(p)) throw InputError("p = " + std::to_string(p) + " is not prime");
  auto codes = reduce_poly(f, p);
  for (unsigned j = 1; j <= level; ++j) {
    auto F = GaloisField::get(p, j, cap);
    std::vector<GaloisField::Elem> coeffs;
    for (auto c : codes) coeffs.push_back(F->constant(c));
    std::vector<bool> seen(F->order(), false);
    for (std::uint64_t code = 0; code < F->order(); ++code) {
      auto x = F->decode(code);
      auto acc = F->zero();
      for (std::size_t i = coeffs.size(); i-- > 0;) acc = F->add(F->mul(acc, x), coeffs[i]);
      std::uint64_t y = F->encode(acc);
      if (seen[y]) return false;
      seen[y] = true;
    }
  }
  return true;
}

Valuation first_slope(const QPoly& f, unsigned long p) {
  if (!is_prime(p)) throw InputError("p = " + std::to_string(p) + " is not prime");
  auto codes = reduce_poly(f, p);
  std::vector<Integer> counts(p, 0);
  for (unsigned long x = 0; x < p; ++x) {
    std::uint64_t acc = 0;
    for (std::size_t i = codes.size(); i-- > 0;) acc = (acc * x + codes[i]) % p;
    counts[acc] += 1;
  }
  return pi_valuation(CyclotomicInteger::from_counts(p, counts));
}

}  // namespace hsnp
