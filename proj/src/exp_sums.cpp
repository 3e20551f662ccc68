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

#include "hsnp/exp_sums.hpp"

#include <limits>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <tuple>

#include "hsnp/errors.hpp"

namespace hsnp {

namespace {

std::shared_ptr<const FieldTower> tower_for(unsigned long p, unsigned a, unsigned k, std::uint64_t cap) {
  static std::mutex mu;
  static std::map<std::tuple<unsigned long, unsigned, unsigned>, std::shared_ptr<const FieldTower>> cache;
  std::uint64_t total = checked_pow(p, a * k);
  if (total > cap)
    throw SizeCapError("field of order " + std::to_string(p) + "^" + std::to_string(a * k) + " exceeds cap " +
                       std::to_string(cap));
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_tuple(p, a, k);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto t = std::make_shared<const FieldTower>(p, a, k, std::max(cap, total));
  cache.emplace(key, t);
  return t;
}

// p^e <= cap without overflow.
bool power_within(unsigned long p, long e, std::uint64_t cap) {
  std::uint64_t r = 1;
  for (long i = 0; i < e; ++i) {
    if (r > cap / p) return false;
    r *= p;
  }
  return r <= cap;
}

std::vector<Integer> to_integers(const std::vector<std::uint64_t>& counts) {
  std::vector<Integer> out;
  out.reserve(counts.size());
  for (auto c : counts) {
    Integer z;
    mpz_import(z.get_mpz_t(), 1, 1, sizeof(c), 0, 0, &c);
    out.push_back(std::move(z));
  }
  return out;
}

// Terms of P(x^e) over the top field of the tower.
SumSpec spec_for(const FieldTower& tower, const LaurentPolynomial& P, long e) {
  SumSpec spec;
  for (long i = -P.d2; i <= P.d1; ++i) {
    std::uint64_t c = P.coeff(i);
    if (c == 0) continue;
    spec.terms.emplace_back(i * e, tower.embedded_log(c));
  }
  return spec;
}

void set_affine(SumSpec& spec, const FieldTower& tower, const LaurentPolynomial& P) {
  spec.affine = true;
  spec.affine_trace = tower.trace_to_prime(tower.embed(tower.base().decode(P.coeff(0))));
}

void require_coprime(const LaurentPolynomial& P, long s) {
  std::uint64_t m = static_cast<std::uint64_t>(s) * static_cast<std::uint64_t>(P.d1) *
                    static_cast<std::uint64_t>(std::max<long>(P.d2, 1));
  if (m % P.p == 0)
    throw DivisibilityError("p = " + std::to_string(P.p) + " divides s * d1 * d2");
}

struct ReducedCharacter {
  long r = 0;
  long s = 1;
};

ReducedCharacter reduce_character(long r, long s) {
  if (s < 1) throw InputError("character modulus must be positive");
  long rr = static_cast<long>(mod_floor(r, static_cast<std::uint64_t>(s)));
  long g = std::gcd(rr, s);
  if (rr == 0) return {0, 1};
  return {rr / g, s / g};
}

bool twisted_is_pure(long d2, long s_reduced, Convention convention) {
  if (d2 > 0) return true;
  if (s_reduced > 1) return true;
  return convention == Convention::kAffine;
}

LPolynomial from_sums(const std::vector<BicyclotomicInteger>& sums, unsigned long p, unsigned a, unsigned long s,
                      long degree, unsigned count) {
  LPolynomial L;
  L.p = p;
  L.a = a;
  L.s = s;
  if (degree == 0) {
    L.coeffs = {BicyclotomicInteger::from_integer(p, s, 1)};
    return L;
  }
  DegreeCheck mode = count >= static_cast<unsigned>(degree + 1) ? DegreeCheck::kVanishing : DegreeCheck::kWeilNorm;
  L.coeffs = series_exp(sums, degree, mode, Integer(checked_pow(p, a)));
  return L;
}

LPolynomial to_prime_ring(const LPolynomial& L) {
  LPolynomial out;
  out.p = L.p;
  out.a = L.a;
  out.s = 1;
  out.anchor = 0;
  for (const auto& c : L.coeffs) {
    if (!c.in_prime_subring()) throw ConsistencyError("product of twisted factors leaves Z[zeta_p]");
    out.coeffs.push_back(BicyclotomicInteger::from_cyclotomic(c.to_cyclotomic(), 1));
  }
  return out;
}

}  // namespace

Convention parse_convention(const std::string& name) {
  if (name == "torus") return Convention::kTorus;
  if (name == "affine") return Convention::kAffine;
  throw InputError("unknown convention '" + name + "' (expected torus or affine)");
}

std::string to_string(Convention c) { return c == Convention::kTorus ? "torus" : "affine"; }

// ------------------------------------------------------------ polynomials

LaurentPolynomial LaurentPolynomial::make(unsigned long p, unsigned a, long d1, long d2,
                                          std::vector<std::uint64_t> coeffs) {
  if (!is_prime(p)) throw InputError("p = " + std::to_string(p) + " is not prime");
  if (a == 0) throw InputError("a must be positive");
  if (d1 < 1) throw InputError("d1 must be at least 1");
  if (d2 < 0) throw InputError("d2 must be nonnegative");
  if (coeffs.size() != static_cast<std::size_t>(d1 + d2 + 1))
    throw InputError("expected " + std::to_string(d1 + d2 + 1) + " coefficients, got " +
                     std::to_string(coeffs.size()));
  std::uint64_t q = checked_pow(p, a);
  for (auto c : coeffs)
    if (c >= q) throw InputError("coefficient code " + std::to_string(c) + " is not an element of F_q");
  if (coeffs.back() == 0) throw DegenerateInputError("leading coefficient a_{d1} vanishes");
  if (d2 > 0 && coeffs.front() == 0) throw DegenerateInputError("trailing coefficient a_{-d2} vanishes");
  LaurentPolynomial P;
  P.p = p;
  P.a = a;
  P.d1 = d1;
  P.d2 = d2;
  P.coeffs = std::move(coeffs);
  return P;
}

LaurentPolynomial LaurentPolynomial::scaled(std::uint64_t c) const {
  if (c % p == 0) throw DegenerateInputError("scaling by zero");
  auto field = GaloisField::get(p, a);
  LaurentPolynomial out = *this;
  for (auto& x : out.coeffs) x = field->encode(field->scale(field->decode(x), c % p));
  return out;
}

LaurentPolynomial LaurentPolynomial::embedded(unsigned k, std::uint64_t cap) const {
  if (k == 1) return *this;
  auto tower = tower_for(p, a, k, cap);
  LaurentPolynomial out = *this;
  out.a = a * k;
  for (auto& x : out.coeffs) x = tower->top().encode(tower->embed(tower->base().decode(x)));
  return out;
}

std::string LaurentPolynomial::str() const {
  std::ostringstream os;
  bool first = true;
  for (long i = d1; i >= -d2; --i) {
    std::uint64_t c = coeff(i);
    if (c == 0) continue;
    if (!first) os << " + ";
    first = false;
    std::string cs = a > 1 ? "[" + std::to_string(c) + "]" : std::to_string(c);
    if (i == 0) {
      os << cs;
      continue;
    }
    if (c != 1) os << cs << '*';
    os << 'x';
    if (i != 1) os << '^' << i;
  }
  if (first) os << '0';
  return os.str();
}

LaurentPolynomial RationalLaurent::reduce(unsigned long p) const {
  if (coeffs.size() != static_cast<std::size_t>(d1 + d2 + 1)) throw InputError("coefficient count mismatch");
  std::vector<std::uint64_t> codes;
  for (const auto& c : coeffs) {
    Integer den = c.get_den();
    if (den % p == 0) throw ReductionError("denominator of " + to_string(c) + " is divisible by p");
    Integer num = c.get_num();
    Integer inv;
    Integer pz(p);
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), pz.get_mpz_t());
    Integer v = num * inv;
    mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), pz.get_mpz_t());
    codes.push_back(v.get_ui());
  }
  return LaurentPolynomial::make(p, 1, d1, d2, std::move(codes));
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
  if (n == 0) throw InputError("empty sampling range");
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = max - (max % n);
  for (;;) {
    std::uint64_t x = rng();
    if (x < limit) return x % n;
  }
}

LaurentPolynomial random_laurent(unsigned long p, unsigned a, long d1, long d2, std::mt19937_64& rng) {
  if (d1 < 1 || d2 < 0) throw InputError("invalid degrees");
  std::uint64_t q = checked_pow(p, a);
  std::vector<std::uint64_t> coeffs(static_cast<std::size_t>(d1 + d2 + 1), 0);
  for (long i = 0; i < d1 + d2; ++i) {
    std::uint64_t c = uniform_below(rng, q);
    if (i == 0 && d2 > 0)
      while (c == 0) c = uniform_below(rng, q);
    coeffs[static_cast<std::size_t>(i)] = c;
  }
  coeffs.back() = 1;
  return LaurentPolynomial::make(p, a, d1, d2, std::move(coeffs));
}

// ------------------------------------------------------------ enumeration

std::vector<std::uint64_t> enumerate_counts(const GaloisField& field, const SumSpec& spec) {
  const std::uint64_t M = field.order() - 1;
  const unsigned long p = field.p();
  const std::uint64_t cm = spec.chi_mod;
  if (cm == 0 || M % cm != 0)
    throw DivisibilityError("character modulus " + std::to_string(cm) + " does not divide " + std::to_string(M));
  const std::uint64_t cstep = spec.chi_step % cm;
  if (spec.affine && cstep != 0) throw InputError("x = 0 only contributes for the trivial character");

  std::uint64_t period = 1;
  std::vector<std::uint64_t> idx, step;
  for (const auto& [e, lg] : spec.terms) {
    std::uint64_t st = mod_floor(e, M);
    idx.push_back(lg % M);
    step.push_back(st);
    period = lcm_u64(period, M / gcd_u64(M, st));
  }
  period = lcm_u64(period, cm / gcd_u64(cm, cstep));

  const auto& T = field.trace_table();
  std::vector<std::uint64_t> counts(p * cm, 0);
  const std::size_t nt = idx.size();
  std::uint64_t j = 0;
  for (std::uint64_t e = 0; e < period; ++e) {
    unsigned c = 0;
    for (std::size_t t = 0; t < nt; ++t) {
      c += T[idx[t]];
      idx[t] += step[t];
      if (idx[t] >= M) idx[t] -= M;
    }
    ++counts[(c % p) * cm + j];
    j += cstep;
    if (j >= cm) j -= cm;
  }
  const std::uint64_t mult = M / period;
  if (mult != 1)
    for (auto& x : counts) x *= mult;
  if (spec.affine) ++counts[(spec.affine_trace % p) * cm];
  return counts;
}

std::vector<std::uint64_t> enumerate_counts_naive(const FieldTower& tower, const LaurentPolynomial& P, long s,
                                                  Convention convention, std::uint64_t chi_mod, std::uint64_t r) {
  const GaloisField& F = tower.top();
  const unsigned long p = F.p();
  if (chi_mod == 0) throw InputError("character modulus must be positive");
  const bool trivial = r % chi_mod == 0;
  std::vector<GaloisField::Elem> coeffs;
  for (long i = -P.d2; i <= P.d1; ++i) coeffs.push_back(tower.embed(tower.base().decode(P.coeff(i))));
  std::vector<std::uint64_t> counts(p * chi_mod, 0);
  for (std::uint64_t code = 0; code < F.order(); ++code) {
    auto x = F.decode(code);
    if (F.is_zero(x)) {
      if (convention != Convention::kAffine || !trivial) continue;
      if (P.d2 > 0) throw ConventionError("affine convention with a pole at x = 0");
      ++counts[F.trace(coeffs[static_cast<std::size_t>(P.d2)]) * chi_mod];
      continue;
    }
    auto y = F.pow(x, static_cast<std::uint64_t>(s));
    auto yi = F.inv(y);
    auto val = F.zero();
    auto pw = F.one();
    for (long i = 0; i <= P.d1; ++i) {
      val = F.add(val, F.mul(coeffs[static_cast<std::size_t>(i + P.d2)], pw));
      pw = F.mul(pw, y);
    }
    pw = yi;
    for (long i = 1; i <= P.d2; ++i) {
      val = F.add(val, F.mul(coeffs[static_cast<std::size_t>(P.d2 - i)], pw));
      pw = F.mul(pw, yi);
    }
    std::uint64_t j = trivial ? 0 : (r % chi_mod) * tower.chi_exponent(x, chi_mod) % chi_mod;
    ++counts[F.trace(val) * chi_mod + j];
  }
  return counts;
}

// ------------------------------------------------------------ sums

CyclotomicInteger exp_sum(const LaurentPolynomial& P, unsigned k, Convention convention, long s, std::uint64_t cap) {
  if (k == 0) throw InputError("k must be positive");
  if (s < 1) throw InputError("s must be positive");
  if (convention == Convention::kAffine && P.d2 > 0)
    throw ConventionError("affine convention evaluates P at the pole x = 0");
  auto tower = tower_for(P.p, P.a, k, cap);
  SumSpec spec = spec_for(*tower, P, s);
  if (convention == Convention::kAffine) set_affine(spec, *tower, P);
  return CyclotomicInteger::from_counts(P.p, to_integers(enumerate_counts(tower->top(), spec)));
}

namespace {

// Twisted sum in Z[zeta_p, zeta_{s'}] for an already reduced character.
BicyclotomicInteger twisted_sum_reduced(const LaurentPolynomial& P, unsigned k, ReducedCharacter chi,
                                        Convention convention, std::uint64_t cap) {
  auto tower = tower_for(P.p, P.a, k, cap);
  SumSpec spec = spec_for(*tower, P, 1);
  std::uint64_t sm = static_cast<std::uint64_t>(chi.s);
  spec.chi_mod = sm;
  spec.chi_step = mulmod_u64(static_cast<std::uint64_t>(chi.r), tower->norm_exponent() % sm, sm);
  if (chi.s == 1 && convention == Convention::kAffine) set_affine(spec, *tower, P);
  return BicyclotomicInteger::from_grid(P.p, sm, to_integers(enumerate_counts(tower->top(), spec)));
}

void require_character(const LaurentPolynomial& P, ReducedCharacter chi) {
  std::uint64_t q1 = checked_pow(P.p, P.a) - 1;
  if (q1 % static_cast<std::uint64_t>(chi.s) != 0)
    throw DivisibilityError("the character of order " + std::to_string(chi.s) + " is not defined over F_" +
                            std::to_string(q1 + 1) + "; pass to the field given by refine_by_power");
}

}  // namespace

BicyclotomicInteger twisted_exp_sum(const LaurentPolynomial& P, unsigned k, long r, long s, std::uint64_t cap) {
  if (k == 0) throw InputError("k must be positive");
  ReducedCharacter chi = reduce_character(r, s);
  require_character(P, chi);
  return twisted_sum_reduced(P, k, chi, Convention::kTorus, cap).lift(static_cast<unsigned long>(s));
}

BicyclotomicInteger gauss_sum(unsigned long p, unsigned a, long r, long s, std::uint64_t cap) {
  if (!is_prime(p)) throw InputError("p = " + std::to_string(p) + " is not prime");
  if (s < 1) throw InputError("s must be positive");
  auto tower = tower_for(p, a, 1, cap);
  const std::uint64_t q1 = tower->top().order() - 1;
  const std::uint64_t sm = static_cast<std::uint64_t>(s);
  if (q1 % sm != 0)
    throw DivisibilityError(std::to_string(s) + " does not divide q - 1 = " + std::to_string(q1));
  SumSpec spec;
  spec.terms.emplace_back(1, 0);
  spec.chi_mod = sm;
  spec.chi_step = mod_floor(-static_cast<long long>(r), sm);
  return -BicyclotomicInteger::from_grid(p, sm, to_integers(enumerate_counts(tower->top(), spec)));
}

// ------------------------------------------------------------ L-polynomials

long l_degree(long d1, long d2, long s, Convention convention) {
  if (d1 < 1 || d2 < 0 || s < 1) throw InputError("invalid degrees");
  if (d2 > 0) {
    if (convention == Convention::kAffine) throw ConventionError("affine convention needs d2 = 0");
    return s * (d1 + d2);
  }
  return convention == Convention::kAffine ? s * d1 - 1 : s * d1;
}

long twisted_l_degree(long d1, long d2, long s_reduced, Convention convention) {
  if (d1 < 1 || d2 < 0 || s_reduced < 1) throw InputError("invalid degrees");
  if (d2 > 0) {
    if (convention == Convention::kAffine) throw ConventionError("affine convention needs d2 = 0");
    return d1 + d2;
  }
  if (s_reduced > 1) return d1;
  return convention == Convention::kAffine ? d1 - 1 : d1;
}

unsigned direct_sum_count(unsigned long p, unsigned a, long degree, bool pure, const LOptions& options) {
  if (degree <= 0) return power_within(p, a, options.cap) ? 1 : 0;
  bool full = power_within(p, static_cast<long>(a) * (degree + 1), options.cap);
  bool weil = pure && power_within(p, static_cast<long>(a) * degree, options.cap);
  switch (options.check) {
    case DegreeCheck::kVanishing:
      return full ? static_cast<unsigned>(degree + 1) : 0;
    case DegreeCheck::kWeilNorm:
      return weil ? static_cast<unsigned>(degree) : 0;
    case DegreeCheck::kAuto:
      break;
  }
  if (full) return static_cast<unsigned>(degree + 1);
  if (weil) return static_cast<unsigned>(degree);
  return 0;
}

std::vector<CyclotomicInteger> power_sums(const LaurentPolynomial& P, long s, Convention convention, unsigned kmax,
                                          std::uint64_t cap) {
  std::vector<CyclotomicInteger> out;
  for (unsigned k = 1; k <= kmax; ++k) out.push_back(exp_sum(P, k, convention, s, cap));
  return out;
}

LPolynomial l_polynomial(const LaurentPolynomial& P, long s, Convention convention, const LOptions& options) {
  require_coprime(P, s);
  const long D = l_degree(P.d1, P.d2, s, convention);
  const bool pure = P.d2 > 0 || convention == Convention::kAffine;
  if (options.check == DegreeCheck::kWeilNorm && !pure)
    throw InputError("Weil norm check does not apply to the torus sum of a one-pole polynomial");
  const unsigned B = direct_sum_count(P.p, P.a, D, pure, options);
  if (B == 0)
    throw SizeCapError("direct L-polynomial needs fields beyond the cap " + std::to_string(options.cap));
  std::vector<BicyclotomicInteger> sums;
  for (unsigned k = 1; k <= B; ++k)
    sums.push_back(BicyclotomicInteger::from_cyclotomic(exp_sum(P, k, convention, s, options.cap), 1));
  return from_sums(sums, P.p, P.a, 1, D, B);
}

LPolynomial twisted_l_polynomial(const LaurentPolynomial& P, long r, long s, Convention convention,
                                 const LOptions& options) {
  require_coprime(P, 1);
  ReducedCharacter chi = reduce_character(r, s);
  require_character(P, chi);
  const long D = twisted_l_degree(P.d1, P.d2, chi.s, convention);
  const bool pure = twisted_is_pure(P.d2, chi.s, convention);
  if (options.check == DegreeCheck::kWeilNorm && !pure)
    throw InputError("Weil norm check does not apply to this twisted sum");
  const unsigned B = direct_sum_count(P.p, P.a, D, pure, options);
  if (B == 0)
    throw SizeCapError("twisted L-polynomial needs fields beyond the cap " + std::to_string(options.cap));
  std::vector<BicyclotomicInteger> sums;
  for (unsigned k = 1; k <= B; ++k) sums.push_back(twisted_sum_reduced(P, k, chi, convention, options.cap));
  LPolynomial L = from_sums(sums, P.p, P.a, static_cast<unsigned long>(chi.s), D, B);
  L.anchor = chi.s > 1 ? P.a : 0;
  return L;
}

std::vector<SplitFactor> split_factors(const LaurentPolynomial& P, long s, Convention convention,
                                       const LOptions& options) {
  require_coprime(P, s);
  if (P.d2 > 0 && convention == Convention::kAffine) throw ConventionError("affine convention needs d2 = 0");
  const std::uint64_t sm = static_cast<std::uint64_t>(s);
  const std::uint64_t q = checked_pow(P.p, P.a) % sm;
  std::vector<bool> seen(sm, false);
  std::vector<SplitFactor> out;
  for (std::uint64_t r = 0; r < sm; ++r) {
    if (seen[r]) continue;
    long len = 0;
    std::uint64_t x = r;
    do {
      seen[x] = true;
      ++len;
      x = x * q % sm;
    } while (x != r);
    LaurentPolynomial Pl = P.embedded(static_cast<unsigned>(len), options.cap);
    LPolynomial f = twisted_l_polynomial(Pl, static_cast<long>(r), s, convention, options);
    SplitFactor sf;
    sf.representative = static_cast<long>(r);
    sf.length = len;
    sf.factor = f.substitute_power(static_cast<unsigned>(len));
    out.push_back(std::move(sf));
  }
  return out;
}

namespace {

LPolynomial product_of(const std::vector<SplitFactor>& factors) {
  LPolynomial acc = factors.front().factor;
  for (std::size_t i = 1; i < factors.size(); ++i) acc = multiply(acc, factors[i].factor);
  return to_prime_ring(acc);
}

}  // namespace

LPolynomial l_polynomial_split(const LaurentPolynomial& P, long s, Convention convention, const LOptions& options) {
  return product_of(split_factors(P, s, convention, options));
}

RoutedL l_polynomial_routed(const LaurentPolynomial& P, long s, Convention convention, Route route,
                            const LOptions& options) {
  if (route == Route::kAuto) {
    const long D = l_degree(P.d1, P.d2, s, convention);
    const bool pure = P.d2 > 0 || convention == Convention::kAffine;
    route = direct_sum_count(P.p, P.a, D, pure, options) > 0 ? Route::kDirect : Route::kSplit;
  }
  if (route == Route::kDirect) return {l_polynomial(P, s, convention, options), Route::kDirect};
  return {l_polynomial_split(P, s, convention, options), Route::kSplit};
}

SplitCheck splitting_check(const LaurentPolynomial& P, long s, Convention convention, const LOptions& options) {
  SplitCheck out;
  out.direct = l_polynomial(P, s, convention, options);
  out.factors = split_factors(P, s, convention, options);
  out.product = product_of(out.factors);
  out.polynomial_identity = out.product.coeffs == out.direct.coeffs;

  const long D = out.direct.degree();
  const unsigned long su = static_cast<unsigned long>(s);
  bool sums_ok = true;
  for (long k = 1; k <= std::max<long>(D, 1); ++k) {
    auto tower = tower_for(P.p, P.a, static_cast<unsigned>(k), options.cap);
    const std::uint64_t M = tower->top().order() - 1;
    const std::uint64_t n = gcd_u64(su, M);
    auto lhs = BicyclotomicInteger::from_cyclotomic(exp_sum(P, static_cast<unsigned>(k), convention, s, options.cap), su);
    BicyclotomicInteger rhs(P.p, su);
    for (std::uint64_t t = 0; t < n; ++t) {
      SumSpec spec = spec_for(*tower, P, 1);
      spec.chi_mod = n;
      spec.chi_step = t;
      if (t == 0 && convention == Convention::kAffine) set_affine(spec, *tower, P);
      rhs = rhs + BicyclotomicInteger::from_grid(P.p, n, to_integers(enumerate_counts(tower->top(), spec))).lift(su);
    }
    if (!(lhs == rhs)) sums_ok = false;
  }
  out.sum_identity = sums_ok;
  return out;
}

}  // namespace hsnp
