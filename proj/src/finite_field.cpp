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

#include "hsnp/finite_field.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <tuple>

#include "hsnp/arith.hpp"
#include "hsnp/errors.hpp"

namespace hsnp {

namespace {

void trim(FpPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

FpPoly poly_mod(FpPoly a, const FpPoly& m, unsigned long p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  std::uint64_t lead_inv = invmod_u64(m.back(), p);
  while (a.size() > dm) {
    std::uint64_t c = a.back() * lead_inv % p;
    std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) {
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + (p - c) * m[i]) % p);
    }
    trim(a);
  }
  return a;
}

FpPoly poly_mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& m, unsigned long p) {
  if (a.empty() || b.empty()) return {};
  FpPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      out[i + j] = static_cast<std::uint32_t>((out[i + j] + std::uint64_t{a[i]} * b[j]) % p);
  }
  return poly_mod(std::move(out), m, p);
}

FpPoly poly_powmod(FpPoly base, std::uint64_t e, const FpPoly& m, unsigned long p) {
  FpPoly result{1};
  base = poly_mod(std::move(base), m, p);
  while (e > 0) {
    if (e & 1U) result = poly_mulmod(result, base, m, p);
    base = poly_mulmod(base, base, m, p);
    e >>= 1U;
  }
  return result;
}

FpPoly poly_gcd(FpPoly a, FpPoly b, unsigned long p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    FpPoly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

FpPoly poly_sub(FpPoly a, const FpPoly& b, unsigned long p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = static_cast<std::uint32_t>((a[i] + p - b[i]) % p);
  trim(a);
  return a;
}

// X^(p^e) mod f, by repeated p-th powering.
FpPoly frobenius_power_of_x(std::uint64_t e, const FpPoly& f, unsigned long p) {
  FpPoly x = poly_mod(FpPoly{0, 1}, f, p);
  for (std::uint64_t i = 0; i < e; ++i) x = poly_powmod(x, p, f, p);
  return x;
}

FpPoly poly_from_code(std::uint64_t code, unsigned n, unsigned long p) {
  FpPoly f(n + 1, 0);
  for (unsigned i = 0; i < n; ++i) {
    f[i] = static_cast<std::uint32_t>(code % p);
    code /= p;
  }
  f[n] = 1;
  return f;
}

}  // namespace

bool is_irreducible(const FpPoly& f_in, unsigned long p) {
  FpPoly f = f_in;
  trim(f);
  if (f.size() < 2) return false;
  if (f.back() != 1) throw InputError("irreducibility test needs a monic polynomial");
  const std::uint64_t n = f.size() - 1;
  if (n == 1) return true;
  FpPoly x{0, 1};
  FpPoly xq = frobenius_power_of_x(n, f, p);
  if (poly_sub(xq, x, p).size() != 0) return false;
  for (std::uint64_t r : prime_divisors(n)) {
    FpPoly h = poly_sub(frobenius_power_of_x(n / r, f, p), x, p);
    FpPoly g = poly_gcd(f, h, p);
    if (g.size() != 1) return false;
  }
  return true;
}

GaloisField::GaloisField(unsigned long p, unsigned n, std::uint64_t cap) : p_(p), n_(n) {
  if (!is_prime(p)) throw InputError(std::to_string(p) + " is not prime");
  if (p >= 256) throw InputError("characteristic must be below 256");
  if (n == 0) throw InputError("field degree must be positive");
  order_ = checked_pow(p, n);
  if (order_ > cap)
    throw SizeCapError("field of order " + std::to_string(p) + "^" + std::to_string(n) + " exceeds cap " +
                       std::to_string(cap));
  std::uint64_t count = order_;
  for (std::uint64_t code = 0; code < count; ++code) {
    FpPoly f = poly_from_code(code, n, p);
    if (is_irreducible(f, p)) {
      modulus_ = std::move(f);
      break;
    }
  }
  if (modulus_.empty()) throw ConsistencyError("no irreducible polynomial found");

  trace_basis_.assign(n, 0);
  Elem xj = one();
  Elem xvar = n > 1 ? decode(p) : constant(0);
  for (unsigned j = 0; j < n; ++j) {
    Elem y = xj, acc = zero();
    for (unsigned i = 0; i < n; ++i) {
      acc = add(acc, y);
      y = frobenius(y);
    }
    for (unsigned i = 1; i < n; ++i)
      if (acc[i] != 0) throw ConsistencyError("trace left the prime field");
    trace_basis_[j] = acc[0];
    xj = mul(xj, xvar);
  }

  const std::uint64_t m = order_ - 1;
  auto qs = prime_divisors(m);
  for (std::uint64_t code = 1; code < order_; ++code) {
    Elem c = decode(code);
    bool ok = true;
    for (std::uint64_t q : qs) {
      Elem t = pow(c, m / q);
      if (t == one()) {
        ok = false;
        break;
      }
    }
    if (ok) {
      generator_ = std::move(c);
      break;
    }
  }
  if (generator_.empty()) throw ConsistencyError("no generator found");
}

std::shared_ptr<const GaloisField> GaloisField::get(unsigned long p, unsigned n, std::uint64_t cap) {
  static std::mutex mu;
  static std::map<std::pair<unsigned long, unsigned>, std::shared_ptr<const GaloisField>> cache;
  std::uint64_t order = checked_pow(p, n);
  if (order > cap)
    throw SizeCapError("field of order " + std::to_string(p) + "^" + std::to_string(n) + " exceeds cap " +
                       std::to_string(cap));
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(p, n);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto field = std::make_shared<const GaloisField>(p, n, cap);
  cache.emplace(key, field);
  return field;
}

GaloisField::Elem GaloisField::one() const {
  Elem e(n_, 0);
  e[0] = 1;
  return e;
}

GaloisField::Elem GaloisField::constant(std::uint64_t c) const {
  Elem e(n_, 0);
  e[0] = static_cast<std::uint32_t>(c % p_);
  return e;
}

GaloisField::Elem GaloisField::decode(std::uint64_t code) const {
  if (code >= order_) throw OutOfRangeError("element code " + std::to_string(code) + " outside field");
  Elem e(n_, 0);
  for (unsigned i = 0; i < n_; ++i) {
    e[i] = static_cast<std::uint32_t>(code % p_);
    code /= p_;
  }
  return e;
}

std::uint64_t GaloisField::encode(const Elem& x) const {
  std::uint64_t code = 0;
  for (unsigned i = n_; i-- > 0;) code = code * p_ + x[i];
  return code;
}

bool GaloisField::is_zero(const Elem& x) const {
  return std::all_of(x.begin(), x.end(), [](std::uint32_t c) { return c == 0; });
}

GaloisField::Elem GaloisField::add(const Elem& x, const Elem& y) const {
  Elem out(n_);
  for (unsigned i = 0; i < n_; ++i) out[i] = static_cast<std::uint32_t>((x[i] + y[i]) % p_);
  return out;
}

GaloisField::Elem GaloisField::sub(const Elem& x, const Elem& y) const {
  Elem out(n_);
  for (unsigned i = 0; i < n_; ++i) out[i] = static_cast<std::uint32_t>((x[i] + p_ - y[i]) % p_);
  return out;
}

GaloisField::Elem GaloisField::neg(const Elem& x) const {
  Elem out(n_);
  for (unsigned i = 0; i < n_; ++i) out[i] = static_cast<std::uint32_t>((p_ - x[i]) % p_);
  return out;
}

GaloisField::Elem GaloisField::scale(const Elem& x, std::uint64_t c) const {
  Elem out(n_);
  c %= p_;
  for (unsigned i = 0; i < n_; ++i) out[i] = static_cast<std::uint32_t>(x[i] * c % p_);
  return out;
}

GaloisField::Elem GaloisField::mul(const Elem& x, const Elem& y) const {
  std::vector<std::uint64_t> prod(2 * n_ - 1, 0);
  for (unsigned i = 0; i < n_; ++i) {
    if (x[i] == 0) continue;
    for (unsigned j = 0; j < n_; ++j) prod[i + j] = (prod[i + j] + std::uint64_t{x[i]} * y[j]) % p_;
  }
  for (std::size_t i = prod.size(); i-- > n_;) {
    std::uint64_t c = prod[i];
    if (c == 0) continue;
    std::size_t shift = i - n_;
    for (unsigned j = 0; j < n_; ++j) prod[shift + j] = (prod[shift + j] + (p_ - c) * modulus_[j]) % p_;
  }
  Elem out(n_);
  for (unsigned i = 0; i < n_; ++i) out[i] = static_cast<std::uint32_t>(prod[i]);
  return out;
}

GaloisField::Elem GaloisField::pow(const Elem& x, std::uint64_t e) const {
  Elem result = one();
  Elem base = x;
  while (e > 0) {
    if (e & 1U) result = mul(result, base);
    base = mul(base, base);
    e >>= 1U;
  }
  return result;
}

GaloisField::Elem GaloisField::inv(const Elem& x) const {
  if (is_zero(x)) throw DomainError("zero has no inverse");
  return pow(x, order_ - 2);
}

std::uint32_t GaloisField::trace(const Elem& x) const {
  std::uint64_t acc = 0;
  for (unsigned i = 0; i < n_; ++i) acc += std::uint64_t{x[i]} * trace_basis_[i];
  return static_cast<std::uint32_t>(acc % p_);
}

std::uint64_t GaloisField::dlog(const Elem& x) const {
  if (is_zero(x)) throw DomainError("discrete log of zero");
  const std::uint64_t m = order_ - 1;
  std::call_once(bsgs_once_, [&] {
    giant_m_ = static_cast<std::uint64_t>(std::ceil(std::sqrt(static_cast<double>(m))));
    if (giant_m_ == 0) giant_m_ = 1;
    Elem y = one();
    baby_.reserve(giant_m_ * 2);
    for (std::uint64_t j = 0; j < giant_m_; ++j) {
      baby_.emplace(encode(y), static_cast<std::uint32_t>(j));
      y = mul(y, generator_);
    }
    giant_step_ = inv(pow(generator_, giant_m_));
  });
  Elem y = x;
  for (std::uint64_t i = 0; i <= giant_m_; ++i) {
    auto it = baby_.find(encode(y));
    if (it != baby_.end()) return (i * giant_m_ + it->second) % m;
    y = mul(y, giant_step_);
  }
  throw ConsistencyError("discrete log not found");
}

const std::vector<std::uint8_t>& GaloisField::trace_table() const {
  std::call_once(trace_once_, [&] {
    const std::uint64_t m = order_ - 1;
    trace_table_.assign(m, 0);
    // Multiplication by g uses only its nonzero coefficients.
    std::vector<std::pair<unsigned, std::uint64_t>> terms;
    for (unsigned i = 0; i < n_; ++i)
      if (generator_[i] != 0) terms.emplace_back(i, generator_[i]);
    unsigned top = terms.back().first;
    std::vector<std::uint64_t> x(n_ + top, 0), tmp(n_ + top, 0);
    x[0] = 1;
    for (std::uint64_t e = 0; e < m; ++e) {
      std::uint64_t acc = 0;
      for (unsigned i = 0; i < n_; ++i) acc += x[i] * trace_basis_[i];
      trace_table_[e] = static_cast<std::uint8_t>(acc % p_);
      std::fill(tmp.begin(), tmp.end(), 0);
      for (const auto& [shift, c] : terms)
        for (unsigned i = 0; i < n_; ++i) tmp[i + shift] += x[i] * c;
      for (std::size_t i = tmp.size(); i-- > n_;) {
        std::uint64_t c = tmp[i] % p_;
        if (c == 0) continue;
        std::size_t shift = i - n_;
        for (unsigned j = 0; j < n_; ++j) tmp[shift + j] += (p_ - c) * modulus_[j];
      }
      for (unsigned i = 0; i < n_; ++i) x[i] = tmp[i] % p_;
    }
  });
  return trace_table_;
}

FpPoly GaloisField::minimal_polynomial(const Elem& x) const {
  std::vector<Elem> conj{x};
  for (Elem y = frobenius(x); y != x; y = frobenius(y)) conj.push_back(y);
  // prod (X - c) with coefficients in the field, low degree first.
  std::vector<Elem> poly{one()};
  for (const auto& c : conj) {
    std::vector<Elem> next(poly.size() + 1, zero());
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i + 1] = add(next[i + 1], poly[i]);
      next[i] = sub(next[i], mul(poly[i], c));
    }
    poly = std::move(next);
  }
  FpPoly out;
  for (const auto& c : poly) {
    for (unsigned i = 1; i < n_; ++i)
      if (c[i] != 0) throw ConsistencyError("minimal polynomial left the prime field");
    out.push_back(c[0]);
  }
  return out;
}

FieldTower::FieldTower(unsigned long p, unsigned a, unsigned k, std::uint64_t cap) : a_(a), k_(k) {
  if (a == 0 || k == 0) throw InputError("tower degrees must be positive");
  std::uint64_t total = checked_pow(p, a * k);
  if (total > cap)
    throw SizeCapError("field of order " + std::to_string(p) + "^" + std::to_string(a * k) + " exceeds cap " +
                       std::to_string(cap));
  base_ = GaloisField::get(p, a, cap);
  top_ = k == 1 ? base_ : GaloisField::get(p, a * k, cap);
  if (k == 1) {
    theta_ = a > 1 ? base_->decode(p) : base_->one();
    lift_ = 1;
    norm_exp_ = 1;
    return;
  }
  const std::uint64_t big = top_->order() - 1;
  const std::uint64_t small = base_->order() - 1;
  const std::uint64_t c = big / small;
  if (a == 1) {
    theta_ = top_->zero();
  } else {
    // Roots of the base modulus lie in the subgroup of order q - 1.
    Elem step = top_->generator_power(c);
    Elem y = top_->one();
    std::uint64_t best = 0;
    bool found = false;
    for (std::uint64_t j = 0; j < small; ++j) {
      Elem acc = top_->zero();
      const FpPoly& f = base_->modulus();
      for (std::size_t i = f.size(); i-- > 0;) acc = top_->add(top_->mul(acc, y), top_->constant(f[i]));
      if (top_->is_zero(acc)) {
        std::uint64_t code = top_->encode(y);
        if (!found || code < best) best = code;
        found = true;
      }
      y = top_->mul(y, step);
    }
    if (!found) throw ConsistencyError("base modulus has no root in the top field");
    theta_ = top_->decode(best);
  }
  std::uint64_t lg = top_->dlog(embed(base_->generator()));
  if (lg % c != 0) throw ConsistencyError("embedded generator outside the subfield");
  lift_ = lg;
  std::uint64_t w = lg / c;
  norm_exp_ = invmod_u64(w % small, small);
  if (small == 1) norm_exp_ = 0;
}

FieldTower::Elem FieldTower::embed(const Elem& x) const {
  if (k_ == 1) return x;
  Elem acc = top_->zero();
  Elem pw = top_->one();
  for (unsigned i = 0; i < a_; ++i) {
    if (x[i] != 0) acc = top_->add(acc, top_->scale(pw, x[i]));
    pw = top_->mul(pw, theta_);
  }
  return acc;
}

std::uint64_t FieldTower::embedded_log(std::uint64_t base_code) const {
  Elem x = base_->decode(base_code);
  std::uint64_t e = base_->dlog(x);
  const std::uint64_t big = top_->order() - 1;
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(e) * lift_) % big);
}

FieldTower::Elem FieldTower::norm_to_subfield(const Elem& x) const {
  if (top_->is_zero(x)) return base_->zero();
  if (k_ == 1) return x;
  const std::uint64_t big = top_->order() - 1;
  const std::uint64_t small = base_->order() - 1;
  const std::uint64_t c = big / small;
  Elem y = top_->pow(x, c);
  std::uint64_t e = top_->dlog(y);
  if (e % c != 0) throw ConsistencyError("norm left the subfield");
  std::uint64_t u = mulmod_u64((e / c) % small, norm_exp_, small);
  Elem out = base_->generator_power(u);
  if (embed(out) != y) throw ConsistencyError("norm pullback failed");
  return out;
}

std::uint64_t FieldTower::chi_exponent(const Elem& x, std::uint64_t s) const {
  const std::uint64_t small = base_->order() - 1;
  if (s == 0 || small % s != 0) throw DivisibilityError("s does not divide q - 1");
  if (top_->is_zero(x)) throw DomainError("character of zero");
  std::uint64_t e = top_->dlog(x);
  return mulmod_u64(e % small, norm_exp_ % small, small) % s;
}

FieldTower build_tower(unsigned long p, unsigned a, unsigned k, std::uint64_t cap) { return FieldTower(p, a, k, cap); }

}  // namespace hsnp
