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

#include "hsnp/local_ring.hpp"

#include <functional>
#include <map>
#include <mutex>
#include <tuple>

#include "hsnp/errors.hpp"

namespace hsnp {

namespace {

using ZPoly = std::vector<Integer>;

void trim(ZPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

ZPoly reduce(ZPoly f, const Integer& m) {
  for (auto& c : f) mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
  trim(f);
  return f;
}

ZPoly mul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

ZPoly sub(ZPoly a, const ZPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

// Division with remainder modulo a prime p; divisor need not be monic.
std::pair<ZPoly, ZPoly> divmod_p(ZPoly a, ZPoly b, unsigned long p) {
  Integer P(static_cast<long>(p));
  a = reduce(std::move(a), P);
  b = reduce(std::move(b), P);
  if (b.empty()) throw DomainError("polynomial division by zero");
  Integer lead_inv;
  mpz_invert(lead_inv.get_mpz_t(), b.back().get_mpz_t(), P.get_mpz_t());
  ZPoly q;
  if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, 0);
  while (a.size() >= b.size()) {
    std::size_t shift = a.size() - b.size();
    Integer c = a.back() * lead_inv;
    mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), P.get_mpz_t());
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
    a = reduce(std::move(a), P);
  }
  return {reduce(std::move(q), P), a};
}

// s*a + t*b = 1 modulo p, for coprime a and b.
std::pair<ZPoly, ZPoly> bezout_p(const ZPoly& a, const ZPoly& b, unsigned long p) {
  Integer P(static_cast<long>(p));
  ZPoly r0 = reduce(a, P), r1 = reduce(b, P);
  ZPoly s0{1}, s1{}, t0{}, t1{1};
  while (!r1.empty()) {
    auto [q, r] = divmod_p(r0, r1, p);
    ZPoly s2 = reduce(sub(s0, mul(q, s1)), P);
    ZPoly t2 = reduce(sub(t0, mul(q, t1)), P);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.size() != 1) throw ConsistencyError("factors of Phi_s mod p are not coprime");
  Integer inv;
  mpz_invert(inv.get_mpz_t(), r0[0].get_mpz_t(), P.get_mpz_t());
  for (auto& c : s0) c *= inv;
  for (auto& c : t0) c *= inv;
  return {reduce(std::move(s0), P), reduce(std::move(t0), P)};
}

std::uint64_t poly_code(const FpPoly& f, unsigned long p) {
  std::uint64_t code = 0;
  for (std::size_t i = f.size() - 1; i-- > 0;) code = code * p + f[i];
  return code;
}

std::mutex& cache_mutex() {
  static std::mutex mu;
  return mu;
}

std::map<std::tuple<unsigned long, unsigned long, unsigned, unsigned>, std::shared_ptr<const LocalRingModel>>&
model_cache() {
  static std::map<std::tuple<unsigned long, unsigned long, unsigned, unsigned>, std::shared_ptr<const LocalRingModel>>
      cache;
  return cache;
}

std::shared_ptr<const LocalRingModel> cached(unsigned long p, unsigned long s, unsigned anchor, unsigned precision,
                                             const std::function<FpPoly()>& factor) {
  auto key = std::make_tuple(p, s, anchor, precision);
  {
    std::lock_guard<std::mutex> lock(cache_mutex());
    auto it = model_cache().find(key);
    if (it != model_cache().end()) return it->second;
  }
  auto model = std::make_shared<const LocalRingModel>(p, s, anchor, factor(), precision);
  std::lock_guard<std::mutex> lock(cache_mutex());
  return model_cache().emplace(key, model).first->second;
}

}  // namespace

std::shared_ptr<const LocalRingModel> LocalRingModel::lexicographic(unsigned long p, unsigned long s,
                                                                    unsigned precision) {
  return cached(p, s, 0, precision, [p, s] {
    if (gcd_u64(p, s) != 1) throw InputError("s must be prime to p");
    unsigned m = static_cast<unsigned>(multiplicative_order(p % s, s));
    auto field = GaloisField::get(p, m);
    auto beta = field->generator_power((field->order() - 1) / s);
    FpPoly best;
    std::uint64_t best_code = 0;
    for (unsigned long j = 1; j <= s; ++j) {
      if (gcd_u64(j % s, s) != 1 && s > 1) continue;
      FpPoly f = field->minimal_polynomial(field->pow(beta, j));
      std::uint64_t code = poly_code(f, p);
      if (best.empty() || code < best_code) {
        best = f;
        best_code = code;
      }
    }
    return best;
  });
}

std::shared_ptr<const LocalRingModel> LocalRingModel::anchored(unsigned long p, unsigned long s, unsigned n,
                                                               unsigned precision) {
  return cached(p, s, n, precision, [p, s, n] {
    auto field = GaloisField::get(p, n);
    if ((field->order() - 1) % s != 0) throw DivisibilityError("s does not divide p^n - 1");
    return field->minimal_polynomial(field->generator_power((field->order() - 1) / s));
  });
}

LocalRingModel::LocalRingModel(unsigned long p, unsigned long s, unsigned anchor, FpPoly factor, unsigned precision)
    : p_(p), s_(s), anchor_(anchor), factor_(std::move(factor)), M_(precision) {
  if (!is_prime(p)) throw InputError(std::to_string(p) + " is not prime");
  if (gcd_u64(p, s) != 1) throw InputError("s must be prime to p");
  if (precision == 0) throw InputError("precision must be positive");
  m_ = factor_.size() - 1;
  if (!is_irreducible(factor_, p)) throw ConsistencyError("residual factor is reducible");
  mpz_ui_pow_ui(modulus_.get_mpz_t(), p, M_);

  const ZPoly f = cyclotomic_polynomial(s);
  ZPoly g0(factor_.begin(), factor_.end());
  auto [h0, rem] = divmod_p(f, g0, p);
  if (!rem.empty()) throw ConsistencyError("residual factor does not divide Phi_s mod p");
  auto [s0, t0] = bezout_p(g0, h0, p);  // s0*g0 + t0*h0 = 1
  (void)s0;
  ZPoly g = g0, h = h0;
  Integer pk(static_cast<long>(p));
  for (unsigned k = 1; k < M_; ++k) {
    ZPoly e = sub(f, mul(g, h));
    for (auto& c : e) {
      if (!mpz_divisible_p(c.get_mpz_t(), pk.get_mpz_t())) throw ConsistencyError("Hensel step lost divisibility");
      mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), pk.get_mpz_t());
    }
    ZPoly dg = divmod_p(mul(e, t0), g0, p).second;
    auto [dh, r2] = divmod_p(sub(e, mul(dg, h0)), g0, p);
    if (!r2.empty()) throw ConsistencyError("Hensel correction is not exact");
    for (auto& c : dg) c *= pk;
    for (auto& c : dh) c *= pk;
    g.resize(std::max(g.size(), dg.size()), 0);
    for (std::size_t i = 0; i < dg.size(); ++i) g[i] += dg[i];
    h.resize(std::max(h.size(), dh.size()), 0);
    for (std::size_t i = 0; i < dh.size(); ++i) h[i] += dh[i];
    pk *= static_cast<long>(p);
  }
  H_ = g;
  H_.resize(m_ + 1, 0);
  for (auto& c : H_) mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), modulus_.get_mpz_t());
  if (H_.back() != 1) throw ConsistencyError("lifted factor is not monic");

  // zeta_p^u = (1 - pi)^u needs no reduction for u < p - 1.
  zeta_p_.assign(p - 1, std::vector<Integer>(p - 1, 0));
  for (unsigned long u = 0; u + 1 < p; ++u) {
    Integer binom = 1;
    for (unsigned long i = 0; i <= u; ++i) {
      zeta_p_[u][i] = (i % 2 == 0) ? binom : Integer(-binom);
      binom = binom * static_cast<long>(u - i) / static_cast<long>(i + 1);
    }
  }
  // zeta_s^v = y^v mod H.
  const unsigned long phi = f.size() - 1;
  zeta_s_.assign(phi, std::vector<Integer>(m_, 0));
  std::vector<Integer> cur(m_, 0);
  cur[0] = 1;
  for (unsigned long v = 0; v < phi; ++v) {
    zeta_s_[v] = cur;
    Integer top = cur[m_ - 1];
    for (unsigned long i = m_ - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    for (unsigned long i = 0; i < m_; ++i) {
      cur[i] -= top * H_[i];
      mpz_fdiv_r(cur[i].get_mpz_t(), cur[i].get_mpz_t(), modulus_.get_mpz_t());
    }
  }
}

std::vector<Integer> LocalRingModel::image(const BicyclotomicInteger& x) const {
  if (x.p() != p_ || x.s() != s_) throw InputError("element ring does not match the local model");
  const unsigned long n = p_ - 1, phi = x.phi();
  // First push zeta_s into W, per zeta_p power.
  std::vector<Integer> rows(n * m_, 0);
  for (unsigned long u = 0; u < n; ++u)
    for (unsigned long v = 0; v < phi; ++v) {
      const Integer& c = x.coord(u, v);
      if (c == 0) continue;
      for (unsigned long j = 0; j < m_; ++j)
        mpz_addmul(rows[u * m_ + j].get_mpz_t(), c.get_mpz_t(), zeta_s_[v][j].get_mpz_t());
    }
  std::vector<Integer> out(n * m_, 0);
  for (unsigned long u = 0; u < n; ++u)
    for (unsigned long i = 0; i <= u; ++i)
      for (unsigned long j = 0; j < m_; ++j)
        mpz_addmul(out[i * m_ + j].get_mpz_t(), rows[u * m_ + j].get_mpz_t(), zeta_p_[u][i].get_mpz_t());
  for (auto& c : out) mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), modulus_.get_mpz_t());
  return out;
}

std::shared_ptr<const LocalRingModel> LocalRingModel::with_precision(unsigned precision) const {
  if (anchor_ > 0) return anchored(p_, s_, anchor_, precision);
  return lexicographic(p_, s_, precision);
}

Valuation local_valuation(const BicyclotomicInteger& x, const LocalRingModel& model) {
  if (x.is_zero()) return Valuation::infinity();
  std::shared_ptr<const LocalRingModel> escalated;
  const LocalRingModel* cur = &model;
  const unsigned long p = model.p();
  const unsigned long m = model.inertia_degree();
  while (true) {
    auto a = cur->image(x);
    bool found = false;
    Rational best;
    for (std::size_t idx = 0; idx < a.size(); ++idx) {
      if (a[idx] == 0) continue;
      long i = static_cast<long>(idx / m);
      Rational v = Rational(padic_order(a[idx], p)) + make_rational(i, static_cast<long>(p - 1));
      if (!found || v < best) best = v;
      found = true;
    }
    if (found) return Valuation(best);
    if (cur->precision() >= kMaxPrecision)
      throw PrecisionError("local model ran out of precision at M = " + std::to_string(cur->precision()));
    escalated = cur->with_precision(std::min(kMaxPrecision, 2 * cur->precision()));
    cur = escalated.get();
  }
}

}  // namespace hsnp
