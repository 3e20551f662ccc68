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

#ifndef HSNP_RESIDUE_CYCLES_HPP
#define HSNP_RESIDUE_CYCLES_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "hsnp/arith.hpp"

namespace hsnp {

/// One orbit of r -> nu*r mod s, listed from its smallest element.
struct ResidueCycle {
  std::vector<long> elements;
  /// (sum of elements) / (s * length), always in [0, 1).
  Rational lambda;

  std::size_t length() const { return elements.size(); }
  friend bool operator==(const ResidueCycle&, const ResidueCycle&) = default;
};

/// Cycle decomposition of multiplication by nu on {0, ..., s-1}.
/// Cycles are sorted by smallest element, so the first one is always (0).
class CycleDecomposition {
 public:
  CycleDecomposition(long s, long nu, std::vector<ResidueCycle> cycles);

  long s() const { return s_; }
  long nu() const { return nu_; }
  const std::vector<ResidueCycle>& cycles() const { return cycles_; }
  std::size_t index_of(long r) const;
  const ResidueCycle& cycle_of(long r) const { return cycles_[index_of(r)]; }

  friend bool operator==(const CycleDecomposition&, const CycleDecomposition&) = default;

 private:
  long s_;
  long nu_;
  std::vector<ResidueCycle> cycles_;
  std::vector<std::size_t> owner_;
};

/// Throws InvalidResidueError unless gcd(nu, s) = 1. nu is reduced mod s.
CycleDecomposition cycle_decomposition(long s, long nu);

/// How one cycle of sigma splits under sigma^a.
struct CycleRefinement {
  std::size_t parent;
  /// Length of every subcycle: l / gcd(l, a).
  std::size_t sublength;
  /// Subcycles, each rooted at its smallest element, sorted.
  std::vector<std::vector<long>> subcycles;
};

std::vector<CycleRefinement> refine_by_power(const CycleDecomposition& dec, unsigned long a);

struct DigitLambda {
  /// Base-p digits K_0..K_{a-1} of (p^a - 1) r / s, least significant first.
  std::vector<unsigned long> digits;
  Rational lambda;
};

/// Throws DivisibilityError unless s | p^a - 1.
DigitLambda digit_lambda(unsigned long p, unsigned a, long r, long s);

}  // namespace hsnp

#endif  // HSNP_RESIDUE_CYCLES_HPP
