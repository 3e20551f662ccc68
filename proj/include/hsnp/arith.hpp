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

// Exact integer/rational helpers shared by every module: arbitrary precision
// numbers, p-adic orders, and the extended-rational valuation type.

#ifndef HSNP_ARITH_HPP
#define HSNP_ARITH_HPP

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hsnp {

using Integer = mpz_class;
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);

/// Parses "7", "-3/4". Throws InputError on malformed text or zero denominator.
Rational parse_rational(std::string_view text);

std::string to_string(const Integer& x);
std::string to_string(const Rational& x);

/// A p-adic order: an exact rational or the +infinity sentinel (order of zero).
class Valuation {
 public:
  Valuation() = default;
  explicit Valuation(Rational value) : value_(std::move(value)) {}
  static Valuation infinity() {
    Valuation v;
    v.infinite_ = true;
    return v;
  }

  bool is_infinite() const { return infinite_; }
  bool is_finite() const { return !infinite_; }
  /// Only meaningful when finite.
  const Rational& value() const { return value_; }

  friend bool operator==(const Valuation& a, const Valuation& b);
  friend std::strong_ordering operator<=>(const Valuation& a, const Valuation& b);
  friend Valuation operator+(const Valuation& a, const Valuation& b);

  std::string str() const;

 private:
  bool infinite_ = false;
  Rational value_ = 0;
};

Valuation min(const Valuation& a, const Valuation& b);

/// v_p(n) for n != 0; p need not be prime but must be >= 2.
long padic_order(const Integer& n, unsigned long p);
/// ord_p of an exact rational; infinity for zero.
Valuation padic_valuation(const Rational& x, unsigned long p);

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);
std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b);
std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t m);
/// Inverse of a mod m; requires gcd(a, m) = 1 (throws InvalidResidueError).
std::uint64_t invmod_u64(std::uint64_t a, std::uint64_t m);
/// Least nonnegative residue of a mod m for signed a.
std::uint64_t mod_floor(long long a, std::uint64_t m);

bool is_prime(std::uint64_t n);
/// Distinct prime divisors in increasing order (trial division).
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

/// p^e, throwing SizeCapError when the result does not fit in 63 bits.
std::uint64_t checked_pow(std::uint64_t p, unsigned e);
/// Euler phi.
std::uint64_t euler_phi(std::uint64_t n);
/// Multiplicative order of a modulo m (gcd(a,m) = 1, m >= 1).
std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t m);

}  // namespace hsnp

#endif  // HSNP_ARITH_HPP
