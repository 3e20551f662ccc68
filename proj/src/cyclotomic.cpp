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

#include "hsnp/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <sstream>

#include "hsnp/errors.hpp"
#include "hsnp/local_ring.hpp"

namespace hsnp {

namespace {

std::mutex& table_mutex() {
  static std::mutex mu;
  return mu;
}

std::vector<Integer> poly_divexact(std::vector<Integer> num, const std::vector<Integer>& den) {
  // den is monic.
  std::size_t dn = den.size() - 1;
  std::vector<Integer> q(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    Integer c = num[i];
    q[i - dn] = c;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  return q;
}

// x^e mod Phi_s for 0 <= e < s, each of length phi(s).
const std::vector<std::vector<Integer>>& reduction_table(unsigned long s) {
  static std::map<unsigned long, std::vector<std::vector<Integer>>> cache;
  const auto& phi_s = cyclotomic_polynomial(s);
  std::lock_guard<std::mutex> lock(table_mutex());
  auto it = cache.find(s);
  if (it != cache.end()) return it->second;
  std::size_t phi = phi_s.size() - 1;
  std::vector<std::vector<Integer>> table;
  std::vector<Integer> cur(phi, 0);
  cur[0] = 1;
  for (unsigned long e = 0; e < s; ++e) {
    table.push_back(cur);
    // Multiply by x, then reduce the degree-phi term.
    Integer top = cur[phi - 1];
    for (std::size_t i = phi - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    if (phi == 1) cur[0] = 0;
    if (top != 0)
      for (std::size_t i = 0; i < phi; ++i) cur[i] -= top * phi_s[i];
  }
  return cache.emplace(s, std::move(table)).first->second;
}

unsigned long modp(long k, unsigned long p) { return static_cast<unsigned long>(mod_floor(k, p)); }

}  // namespace

const std::vector<Integer>& cyclotomic_polynomial(unsigned long n) {
  static std::map<unsigned long, std::vector<Integer>> cache;
  if (n == 0) throw InputError("cyclotomic index must be positive");
  {
    std::lock_guard<std::mutex> lock(table_mutex());
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  std::vector<Integer> num(n + 1, 0);
  num[0] = -1;
  num[n] = 1;
  for (unsigned long d = 1; d < n; ++d) {
    if (n % d == 0) num = poly_divexact(std::move(num), cyclotomic_polynomial(d));
  }
  std::lock_guard<std::mutex> lock(table_mutex());
  return cache.emplace(n, std::move(num)).first->second;
}

// ---------------------------------------------------------------- Z[zeta_p]

CyclotomicInteger::CyclotomicInteger(unsigned long p) : p_(p), c_(p - 1, 0) {
  if (!is_prime(p)) throw InputError(std::to_string(p) + " is not prime");
}

CyclotomicInteger::CyclotomicInteger(unsigned long p, std::vector<Integer> coords) : p_(p), c_(std::move(coords)) {
  if (!is_prime(p)) throw InputError(std::to_string(p) + " is not prime");
  if (c_.size() != p - 1) throw InputError("Z[zeta_p] element needs p - 1 coordinates");
}

CyclotomicInteger CyclotomicInteger::from_integer(unsigned long p, const Integer& n) {
  CyclotomicInteger x(p);
  x.c_[0] = n;
  return x;
}

CyclotomicInteger CyclotomicInteger::zeta_power(unsigned long p, long k) {
  std::vector<Integer> counts(p, 0);
  counts[modp(k, p)] = 1;
  return from_counts(p, counts);
}

CyclotomicInteger CyclotomicInteger::from_counts(unsigned long p, const std::vector<Integer>& counts) {
  if (counts.size() != p) throw InputError("count vector must have length p");
  CyclotomicInteger x(p);
  for (unsigned long i = 0; i + 1 < p; ++i) x.c_[i] = counts[i] - counts[p - 1];
  return x;
}

bool CyclotomicInteger::is_zero() const {
  for (const auto& c : c_)
    if (c != 0) return false;
  return true;
}

Integer CyclotomicInteger::coordinate_sum() const {
  Integer s = 0;
  for (const auto& c : c_) s += c;
  return s;
}

CyclotomicInteger CyclotomicInteger::operator-() const {
  CyclotomicInteger out = *this;
  for (auto& c : out.c_) c = -c;
  return out;
}

CyclotomicInteger operator+(const CyclotomicInteger& x, const CyclotomicInteger& y) {
  if (x.p_ != y.p_) throw InputError("mismatched primes");
  CyclotomicInteger out = x;
  for (std::size_t i = 0; i < out.c_.size(); ++i) out.c_[i] += y.c_[i];
  return out;
}

CyclotomicInteger operator-(const CyclotomicInteger& x, const CyclotomicInteger& y) { return x + (-y); }

CyclotomicInteger operator*(const CyclotomicInteger& x, const CyclotomicInteger& y) {
  if (x.p_ != y.p_) throw InputError("mismatched primes");
  const unsigned long p = x.p_;
  std::vector<Integer> acc(p, 0);
  for (unsigned long i = 0; i + 1 < p; ++i) {
    if (x.c_[i] == 0) continue;
    for (unsigned long j = 0; j + 1 < p; ++j) {
      if (y.c_[j] == 0) continue;
      mpz_addmul(acc[(i + j) % p].get_mpz_t(), x.c_[i].get_mpz_t(), y.c_[j].get_mpz_t());
    }
  }
  return CyclotomicInteger::from_counts(p, acc);
}

CyclotomicInteger CyclotomicInteger::conj() const {
  std::vector<Integer> acc(p_, 0);
  for (unsigned long i = 0; i + 1 < p_; ++i) acc[(p_ - i) % p_] = c_[i];
  return from_counts(p_, acc);
}

CyclotomicInteger CyclotomicInteger::divide_by_pi() const {
  Integer total = coordinate_sum();
  if (!mpz_divisible_ui_p(total.get_mpz_t(), p_)) throw DomainError("element is not divisible by 1 - zeta");
  Integer top = total / static_cast<long>(p_);
  CyclotomicInteger out(p_);
  Integer prefix = 0;
  for (unsigned long i = 0; i + 1 < p_; ++i) {
    prefix += c_[i];
    out.c_[i] = prefix - Integer(static_cast<long>(i + 1)) * top;
  }
  return out;
}

std::string CyclotomicInteger::str() const { return BicyclotomicInteger::from_cyclotomic(*this, 1).str(); }

Valuation pi_valuation(const CyclotomicInteger& x) {
  if (x.is_zero()) return Valuation::infinity();
  long v = 0;
  CyclotomicInteger y = x;
  while (mpz_divisible_ui_p(y.coordinate_sum().get_mpz_t(), y.p())) {
    y = y.divide_by_pi();
    ++v;
  }
  return Valuation(make_rational(v, static_cast<long>(x.p() - 1)));
}

// ------------------------------------------------------ Z[zeta_p, zeta_s]

BicyclotomicInteger::BicyclotomicInteger(unsigned long p, unsigned long s) : p_(p), s_(s) {
  if (!is_prime(p)) throw InputError(std::to_string(p) + " is not prime");
  if (s == 0 || gcd_u64(p, s) != 1) throw InputError("s must be positive and prime to p");
  phi_ = cyclotomic_polynomial(s).size() - 1;
  c_.assign((p - 1) * phi_, 0);
}

BicyclotomicInteger::BicyclotomicInteger(unsigned long p, unsigned long s, std::vector<Integer> coords)
    : BicyclotomicInteger(p, s) {
  if (coords.size() != c_.size()) throw InputError("wrong number of bicyclotomic coordinates");
  c_ = std::move(coords);
}

BicyclotomicInteger BicyclotomicInteger::from_integer(unsigned long p, unsigned long s, const Integer& n) {
  BicyclotomicInteger x(p, s);
  x.c_[0] = n;
  return x;
}

BicyclotomicInteger BicyclotomicInteger::monomial(unsigned long p, unsigned long s, long i, long j) {
  std::vector<Integer> grid(p * s, 0);
  grid[modp(i, p) * s + modp(j, s)] = 1;
  return from_grid(p, s, grid);
}

BicyclotomicInteger BicyclotomicInteger::from_cyclotomic(const CyclotomicInteger& x, unsigned long s) {
  BicyclotomicInteger out(x.p(), s);
  for (unsigned long i = 0; i + 1 < x.p(); ++i) out.c_[i * out.phi_] = x.coords()[i];
  return out;
}

BicyclotomicInteger BicyclotomicInteger::from_grid(unsigned long p, unsigned long s, const std::vector<Integer>& grid) {
  BicyclotomicInteger out(p, s);
  if (grid.size() != p * s) throw InputError("grid must have p * s entries");
  const auto& red = reduction_table(s);
  const unsigned long phi = out.phi_;
  std::vector<Integer> rows(p * phi, 0);
  for (unsigned long c = 0; c < p; ++c) {
    for (unsigned long j = 0; j < s; ++j) {
      const Integer& g = grid[c * s + j];
      if (g == 0) continue;
      for (unsigned long t = 0; t < phi; ++t)
        if (red[j][t] != 0) mpz_addmul(rows[c * phi + t].get_mpz_t(), g.get_mpz_t(), red[j][t].get_mpz_t());
    }
  }
  for (unsigned long c = 0; c + 1 < p; ++c)
    for (unsigned long t = 0; t < phi; ++t) out.c_[c * phi + t] = rows[c * phi + t] - rows[(p - 1) * phi + t];
  return out;
}

bool BicyclotomicInteger::is_zero() const {
  for (const auto& c : c_)
    if (c != 0) return false;
  return true;
}

bool BicyclotomicInteger::in_prime_subring() const {
  for (unsigned long i = 0; i + 1 < p_; ++i)
    for (unsigned long j = 1; j < phi_; ++j)
      if (c_[i * phi_ + j] != 0) return false;
  return true;
}

CyclotomicInteger BicyclotomicInteger::to_cyclotomic() const {
  if (!in_prime_subring()) throw DomainError("element has zeta_s components");
  std::vector<Integer> out(p_ - 1);
  for (unsigned long i = 0; i + 1 < p_; ++i) out[i] = c_[i * phi_];
  return CyclotomicInteger(p_, std::move(out));
}

BicyclotomicInteger BicyclotomicInteger::lift(unsigned long t) const {
  if (t % s_ != 0) throw InputError("lift target must be a multiple of s");
  if (t == s_) return *this;
  const unsigned long step = t / s_;
  std::vector<Integer> grid(p_ * t, 0);
  for (unsigned long i = 0; i + 1 < p_; ++i)
    for (unsigned long j = 0; j < phi_; ++j) grid[i * t + j * step] = c_[i * phi_ + j];
  return from_grid(p_, t, grid);
}

BicyclotomicInteger BicyclotomicInteger::operator-() const {
  BicyclotomicInteger out = *this;
  for (auto& c : out.c_) c = -c;
  return out;
}

BicyclotomicInteger operator+(const BicyclotomicInteger& x, const BicyclotomicInteger& y) {
  if (x.p_ != y.p_ || x.s_ != y.s_) throw InputError("mismatched bicyclotomic rings");
  BicyclotomicInteger out = x;
  for (std::size_t i = 0; i < out.c_.size(); ++i) out.c_[i] += y.c_[i];
  return out;
}

BicyclotomicInteger operator-(const BicyclotomicInteger& x, const BicyclotomicInteger& y) { return x + (-y); }

BicyclotomicInteger operator*(const BicyclotomicInteger& x, const BicyclotomicInteger& y) {
  if (x.p_ != y.p_ || x.s_ != y.s_) throw InputError("mismatched bicyclotomic rings");
  const unsigned long p = x.p_, s = x.s_, phi = x.phi_;
  std::vector<Integer> grid(p * s, 0);
  for (unsigned long i = 0; i + 1 < p; ++i) {
    for (unsigned long j = 0; j < phi; ++j) {
      const Integer& a = x.c_[i * phi + j];
      if (a == 0) continue;
      for (unsigned long k = 0; k + 1 < p; ++k) {
        for (unsigned long l = 0; l < phi; ++l) {
          const Integer& b = y.c_[k * phi + l];
          if (b == 0) continue;
          mpz_addmul(grid[((i + k) % p) * s + (j + l) % s].get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        }
      }
    }
  }
  return BicyclotomicInteger::from_grid(p, s, grid);
}

BicyclotomicInteger BicyclotomicInteger::scaled(const Integer& c) const {
  BicyclotomicInteger out = *this;
  for (auto& v : out.c_) v *= c;
  return out;
}

bool BicyclotomicInteger::try_divexact(const Integer& d) {
  for (const auto& v : c_)
    if (!mpz_divisible_p(v.get_mpz_t(), d.get_mpz_t())) return false;
  for (auto& v : c_) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), d.get_mpz_t());
  return true;
}

BicyclotomicInteger BicyclotomicInteger::galois(long u, long v) const {
  if (gcd_u64(modp(u, p_), p_) != 1 || gcd_u64(modp(v, s_), s_) != 1)
    throw InvalidResidueError("Galois exponents must be units");
  std::vector<Integer> grid(p_ * s_, 0);
  for (unsigned long i = 0; i + 1 < p_; ++i)
    for (unsigned long j = 0; j < phi_; ++j) {
      unsigned long ii = modp(u * static_cast<long>(i), p_);
      unsigned long jj = modp(v * static_cast<long>(j), s_);
      grid[ii * s_ + jj] += c_[i * phi_ + j];
    }
  return from_grid(p_, s_, grid);
}

BicyclotomicInteger BicyclotomicInteger::conj() const { return galois(-1, -1); }

std::string BicyclotomicInteger::str() const {
  std::ostringstream os;
  bool first = true;
  for (unsigned long i = 0; i + 1 < p_; ++i) {
    for (unsigned long j = 0; j < phi_; ++j) {
      const Integer& c = c_[i * phi_ + j];
      if (c == 0) continue;
      if (!first) os << (c > 0 ? " + " : " - ");
      else if (c < 0) os << '-';
      first = false;
      Integer a = abs(c);
      bool unit = (i == 0 && j == 0);
      if (a != 1 || unit) os << a.get_str();
      if (i > 0) os << (a != 1 ? "*" : "") << "z" << p_ << (i > 1 ? "^" + std::to_string(i) : "");
      if (j > 0)
        os << ((a != 1 || i > 0) ? "*" : "") << "w" << s_ << (j > 1 ? "^" + std::to_string(j) : "");
    }
  }
  if (first) os << '0';
  return os.str();
}

// ------------------------------------------------------------ L-polynomials

std::string LPolynomial::ring_tag() const {
  if (s <= 2) return "Z[zeta_" + std::to_string(p) + "]";
  return "Z[zeta_" + std::to_string(p) + ", zeta_" + std::to_string(s) + "]";
}

LPolynomial LPolynomial::substitute_power(unsigned m) const {
  if (m == 0 || a % m != 0) throw InputError("substitution power must divide the base exponent");
  LPolynomial out = *this;
  out.a = a / m;
  std::size_t deg = coeffs.empty() ? 0 : (coeffs.size() - 1) * m;
  out.coeffs.assign(deg + 1, BicyclotomicInteger(p, s));
  for (std::size_t i = 0; i < coeffs.size(); ++i) out.coeffs[i * m] = coeffs[i];
  return out;
}

std::string LPolynomial::str() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    std::string c = coeffs[i].str();
    if (i == 0) {
      os << c;
    } else {
      os << '(' << c << ")*T";
      if (i > 1) os << '^' << i;
    }
  }
  if (first) os << '0';
  return os.str();
}

LPolynomial multiply(const LPolynomial& x, const LPolynomial& y) {
  if (x.p != y.p || x.a != y.a) throw InputError("L-polynomials over different base fields");
  LPolynomial out;
  out.p = x.p;
  out.a = x.a;
  out.s = lcm_u64(x.s, y.s);
  out.anchor = x.s > 1 ? x.anchor : y.anchor;
  std::vector<BicyclotomicInteger> xs, ys;
  for (const auto& c : x.coeffs) xs.push_back(c.lift(out.s));
  for (const auto& c : y.coeffs) ys.push_back(c.lift(out.s));
  out.coeffs.assign(xs.size() + ys.size() - 1, BicyclotomicInteger(out.p, out.s));
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (xs[i].is_zero()) continue;
    for (std::size_t j = 0; j < ys.size(); ++j) {
      if (ys[j].is_zero()) continue;
      out.coeffs[i + j] = out.coeffs[i + j] + xs[i] * ys[j];
    }
  }
  return out;
}

std::vector<BicyclotomicInteger> series_exp(const std::vector<BicyclotomicInteger>& sums, long degree,
                                            DegreeCheck check, const Integer& weight) {
  if (degree < 0) throw InputError("negative degree");
  if (sums.empty()) throw InputError("series_exp needs at least one power sum");
  const unsigned long p = sums.front().p(), s = sums.front().s();
  const long have = static_cast<long>(sums.size());
  bool vanishing = check == DegreeCheck::kVanishing || (check == DegreeCheck::kAuto && have >= degree + 1);
  if (vanishing && have < degree + 1)
    throw InputError("vanishing check needs " + std::to_string(degree + 1) + " power sums");
  if (!vanishing && have < degree) throw InputError("need " + std::to_string(degree) + " power sums");
  if (!vanishing && weight <= 0) throw InputError("Weil norm check needs a positive weight");
  long upto = vanishing ? degree + 1 : degree;
  std::vector<BicyclotomicInteger> b;
  b.push_back(BicyclotomicInteger::from_integer(p, s, 1));
  for (long n = 1; n <= upto; ++n) {
    BicyclotomicInteger acc(p, s);
    for (long k = 1; k <= n; ++k) acc = acc + sums[static_cast<std::size_t>(k - 1)] * b[static_cast<std::size_t>(n - k)];
    if (!acc.try_divexact(Integer(n)))
      throw DegreeMismatchError("coefficient " + std::to_string(n) + " is not integral");
    b.push_back(std::move(acc));
  }
  if (vanishing) {
    if (!b.back().is_zero())
      throw DegreeMismatchError("coefficient " + std::to_string(degree + 1) + " does not vanish");
    b.pop_back();
  }
  if (check == DegreeCheck::kWeilNorm || !vanishing) {
    Integer target;
    mpz_pow_ui(target.get_mpz_t(), weight.get_mpz_t(), static_cast<unsigned long>(degree));
    const auto& top = b[static_cast<std::size_t>(degree)];
    if (top * top.conj() != BicyclotomicInteger::from_integer(p, s, target))
      throw DegreeMismatchError("leading coefficient fails the Weil norm check");
  }
  return b;
}

Valuation coefficient_valuation(const LPolynomial& L, const BicyclotomicInteger& x) {
  if (x.in_prime_subring()) return pi_valuation(x.to_cyclotomic());
  auto model = L.anchor > 0 ? LocalRingModel::anchored(L.p, L.s, L.anchor) : LocalRingModel::lexicographic(L.p, L.s);
  return local_valuation(x, *model);
}

Polygon newton_polygon(const LPolynomial& L, unsigned a) {
  if (a == 0) throw InputError("a must be positive");
  std::vector<ValuationPoint> pts;
  for (std::size_t i = 0; i < L.coeffs.size(); ++i) {
    Valuation v = coefficient_valuation(L, L.coeffs[i]);
    if (v.is_finite()) v = Valuation(Rational(v.value() / a));
    pts.push_back({static_cast<long>(i), v});
  }
  if (pts.size() == 1) return Polygon();
  return Polygon::from_valuations(pts);
}

}  // namespace hsnp
