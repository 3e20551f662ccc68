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

// Small finite fields F_{p^n} = F_p[X]/(f) and towers F_p < F_q < F_{q^k}.
//
// The defining polynomial f is the first monic irreducible of degree n in
// the order of its code sum c_i p^i (c_0 least significant), and the
// generator is the element of smallest code with order p^n - 1. Both are
// deterministic, so rebuilding a field reproduces it bit for bit.
//
// Elements are coefficient vectors over F_p (low degree first). Codes
// (sum c_i p^i) are used as compact keys and as the enumeration order.

#ifndef HSNP_FINITE_FIELD_HPP
#define HSNP_FINITE_FIELD_HPP

#include <cstdint>
#include <memory>
#include <mutex>
#include <unordered_map>
#include <vector>

namespace hsnp {

inline constexpr std::uint64_t kDefaultCap = std::uint64_t{1} << 24;

/// Dense polynomial over F_p, low degree first, no trailing zeros.
using FpPoly = std::vector<std::uint32_t>;

/// Rabin's test for a monic polynomial over F_p.
bool is_irreducible(const FpPoly& f, unsigned long p);

class GaloisField {
 public:
  using Elem = std::vector<std::uint32_t>;

  /// Throws InputError for composite p or n = 0, SizeCapError if p^n > cap.
  GaloisField(unsigned long p, unsigned n, std::uint64_t cap = kDefaultCap);

  /// Shared, cached instance.
  static std::shared_ptr<const GaloisField> get(unsigned long p, unsigned n, std::uint64_t cap = kDefaultCap);

  unsigned long p() const { return p_; }
  unsigned degree() const { return n_; }
  std::uint64_t order() const { return order_; }
  /// Monic defining polynomial, length n + 1.
  const FpPoly& modulus() const { return modulus_; }

  Elem zero() const { return Elem(n_, 0); }
  Elem one() const;
  Elem constant(std::uint64_t c) const;
  Elem decode(std::uint64_t code) const;
  std::uint64_t encode(const Elem& x) const;
  bool is_zero(const Elem& x) const;

  Elem add(const Elem& x, const Elem& y) const;
  Elem sub(const Elem& x, const Elem& y) const;
  Elem neg(const Elem& x) const;
  Elem mul(const Elem& x, const Elem& y) const;
  Elem scale(const Elem& x, std::uint64_t c) const;
  Elem pow(const Elem& x, std::uint64_t e) const;
  /// Throws DomainError for zero.
  Elem inv(const Elem& x) const;
  Elem frobenius(const Elem& x) const { return pow(x, p_); }

  /// Absolute trace to F_p.
  std::uint32_t trace(const Elem& x) const;

  const Elem& generator() const { return generator_; }
  std::uint64_t generator_code() const { return encode(generator_); }
  Elem generator_power(std::uint64_t e) const { return pow(generator_, e); }

  /// Baby-step giant-step logarithm to the field generator.
  /// Throws DomainError for zero.
  std::uint64_t dlog(const Elem& x) const;

  /// T[e] = Tr(g^e) for 0 <= e < order - 1; built once, then shared.
  const std::vector<std::uint8_t>& trace_table() const;

  /// Minimal polynomial over F_p of x (monic).
  FpPoly minimal_polynomial(const Elem& x) const;

 private:
  unsigned long p_;
  unsigned n_;
  std::uint64_t order_;
  FpPoly modulus_;
  std::vector<std::uint32_t> trace_basis_;
  Elem generator_;

  mutable std::once_flag trace_once_;
  mutable std::vector<std::uint8_t> trace_table_;
  mutable std::once_flag bsgs_once_;
  mutable std::unordered_map<std::uint64_t, std::uint32_t> baby_;
  mutable std::uint64_t giant_m_ = 0;
  mutable Elem giant_step_;
};

/// F_p < F_q < F_{q^k} with q = p^a. The embedding sends X to the root of
/// smallest code of the base modulus inside the top field.
class FieldTower {
 public:
  using Elem = GaloisField::Elem;

  FieldTower(unsigned long p, unsigned a, unsigned k, std::uint64_t cap = kDefaultCap);

  unsigned long p() const { return base_->p(); }
  unsigned a() const { return a_; }
  unsigned k() const { return k_; }
  const GaloisField& base() const { return *base_; }
  const GaloisField& top() const { return *top_; }
  std::shared_ptr<const GaloisField> base_ptr() const { return base_; }
  std::shared_ptr<const GaloisField> top_ptr() const { return top_; }

  /// Image of the base variable X in the top field.
  const Elem& theta() const { return theta_; }
  Elem embed(const Elem& x) const;
  /// log_g(embed(g_q)) in the top field.
  std::uint64_t lift_exponent() const { return lift_; }
  /// N(g) = g_q^v for the top generator g.
  std::uint64_t norm_exponent() const { return norm_exp_; }
  /// log_g(embed(x)) for a nonzero base element given by code.
  std::uint64_t embedded_log(std::uint64_t base_code) const;

  std::uint32_t trace_to_prime(const Elem& x) const { return top_->trace(x); }
  /// N_{q^k/q}(x) pulled back to the base field.
  Elem norm_to_subfield(const Elem& x) const;
  /// j with chi_s(x) = zeta_s^j, chi_s(x) = zeta_s^{log_{g_q} N(x)}.
  /// Throws DivisibilityError unless s | q - 1.
  std::uint64_t chi_exponent(const Elem& x, std::uint64_t s) const;

 private:
  unsigned a_;
  unsigned k_;
  std::shared_ptr<const GaloisField> base_;
  std::shared_ptr<const GaloisField> top_;
  Elem theta_;
  std::uint64_t lift_ = 1;
  std::uint64_t norm_exp_ = 1;
};

FieldTower build_tower(unsigned long p, unsigned a, unsigned k, std::uint64_t cap = kDefaultCap);

}  // namespace hsnp

#endif  // HSNP_FINITE_FIELD_HPP
