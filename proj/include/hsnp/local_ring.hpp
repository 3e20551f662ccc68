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

// Truncated model of the completion of Z[zeta_p, zeta_s] at a prime above p:
// W = (Z/p^M)[y]/H(y) unramified of degree m = ord_s(p), then pi = 1 - zeta_p
// adjoined through the Eisenstein polynomial Phi_p(1 - X).

#ifndef HSNP_LOCAL_RING_HPP
#define HSNP_LOCAL_RING_HPP

#include <memory>
#include <vector>

#include "hsnp/arith.hpp"
#include "hsnp/cyclotomic.hpp"
#include "hsnp/finite_field.hpp"

namespace hsnp {

inline constexpr unsigned kDefaultPrecision = 12;
inline constexpr unsigned kMaxPrecision = 200;

class LocalRingModel {
 public:
  /// Prime given by the lexicographically smallest irreducible factor of Phi_s mod p.
  static std::shared_ptr<const LocalRingModel> lexicographic(unsigned long p, unsigned long s,
                                                             unsigned precision = kDefaultPrecision);
  /// Prime on which zeta_s reduces to g^((p^n - 1)/s), g the generator of F_{p^n}.
  /// Then chi(x) = zeta_s^(log_g x) is a power of the Teichmuller character.
  static std::shared_ptr<const LocalRingModel> anchored(unsigned long p, unsigned long s, unsigned n,
                                                        unsigned precision = kDefaultPrecision);

  LocalRingModel(unsigned long p, unsigned long s, unsigned anchor, FpPoly factor, unsigned precision);

  unsigned long p() const { return p_; }
  unsigned long s() const { return s_; }
  unsigned precision() const { return M_; }
  unsigned anchor() const { return anchor_; }
  /// Degree m of the unramified part.
  unsigned long inertia_degree() const { return m_; }
  /// The chosen factor of Phi_s mod p (monic, low degree first).
  const FpPoly& residual_factor() const { return factor_; }
  /// Hensel lift of the factor modulo p^M.
  const std::vector<Integer>& lifted_factor() const { return H_; }

  /// Coordinates a_ij (mod p^M) on the basis pi^i y^j.
  std::vector<Integer> image(const BicyclotomicInteger& x) const;

  /// Same prime with precision M.
  std::shared_ptr<const LocalRingModel> with_precision(unsigned precision) const;

 private:
  unsigned long p_;
  unsigned long s_;
  unsigned anchor_;
  FpPoly factor_;
  unsigned M_;
  unsigned long m_;
  Integer modulus_;
  std::vector<Integer> H_;
  // zeta_p^u in the pi basis (length p - 1), zeta_s^v in the y basis (length m).
  std::vector<std::vector<Integer>> zeta_p_;
  std::vector<std::vector<Integer>> zeta_s_;
};

/// ord_p(x) through the model; escalates precision up to kMaxPrecision,
/// then throws PrecisionError. Infinity for zero.
Valuation local_valuation(const BicyclotomicInteger& x, const LocalRingModel& model);

}  // namespace hsnp

#endif  // HSNP_LOCAL_RING_HPP
