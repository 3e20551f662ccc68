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

#include "hsnp/residue_cycles.hpp"

#include <algorithm>

#include "hsnp/errors.hpp"

namespace hsnp {

CycleDecomposition::CycleDecomposition(long s, long nu, std::vector<ResidueCycle> cycles)
    : s_(s), nu_(nu), cycles_(std::move(cycles)), owner_(static_cast<std::size_t>(s), 0) {
  for (std::size_t i = 0; i < cycles_.size(); ++i)
    for (long r : cycles_[i].elements) owner_[static_cast<std::size_t>(r)] = i;
}

std::size_t CycleDecomposition::index_of(long r) const {
  if (r < 0 || r >= s_) throw OutOfRangeError("residue " + std::to_string(r) + " outside [0, s)");
  return owner_[static_cast<std::size_t>(r)];
}

CycleDecomposition cycle_decomposition(long s, long nu) {
  if (s < 1) throw InputError("s must be positive");
  long n = static_cast<long>(mod_floor(nu, static_cast<std::uint64_t>(s)));
  if (gcd_u64(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(s)) != 1)
    throw InvalidResidueError("nu=" + std::to_string(nu) + " is not coprime to s=" + std::to_string(s));
  std::vector<bool> seen(static_cast<std::size_t>(s), false);
  std::vector<ResidueCycle> cycles;
  for (long start = 0; start < s; ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    ResidueCycle cyc;
    long r = start;
    long sum = 0;
    do {
      seen[static_cast<std::size_t>(r)] = true;
      cyc.elements.push_back(r);
      sum += r;
      r = static_cast<long>((static_cast<std::uint64_t>(r) * static_cast<std::uint64_t>(n)) %
                            static_cast<std::uint64_t>(s));
    } while (r != start);
    cyc.lambda = Rational(sum, s * static_cast<long>(cyc.elements.size()));
    cyc.lambda.canonicalize();
    cycles.push_back(std::move(cyc));
  }
  return CycleDecomposition(s, n, std::move(cycles));
}

std::vector<CycleRefinement> refine_by_power(const CycleDecomposition& dec, unsigned long a) {
  if (a == 0) throw InputError("power must be positive");
  std::vector<CycleRefinement> out;
  for (std::size_t i = 0; i < dec.cycles().size(); ++i) {
    const auto& elems = dec.cycles()[i].elements;
    std::size_t len = elems.size();
    std::size_t g = static_cast<std::size_t>(gcd_u64(len, a));
    CycleRefinement ref{i, len / g, {}};
    // Position j of the cycle holds nu^j * r; sigma^a advances positions by a.
    for (std::size_t start = 0; start < g; ++start) {
      std::vector<long> sub;
      std::size_t pos = start;
      for (std::size_t t = 0; t < ref.sublength; ++t) {
        sub.push_back(elems[pos]);
        pos = (pos + a) % len;
      }
      std::rotate(sub.begin(), std::min_element(sub.begin(), sub.end()), sub.end());
      ref.subcycles.push_back(std::move(sub));
    }
    std::sort(ref.subcycles.begin(), ref.subcycles.end());
    out.push_back(std::move(ref));
  }
  return out;
}

DigitLambda digit_lambda(unsigned long p, unsigned a, long r, long s) {
  if (!is_prime(p)) throw InputError(std::to_string(p) + " is not prime");
  if (a == 0) throw InputError("a must be positive");
  if (s < 1 || r < 0 || r >= s) throw OutOfRangeError("need 0 <= r < s");
  Integer q;
  mpz_ui_pow_ui(q.get_mpz_t(), p, a);
  Integer qm1 = q - 1;
  if (!mpz_divisible_ui_p(qm1.get_mpz_t(), static_cast<unsigned long>(s)))
    throw DivisibilityError("s=" + std::to_string(s) + " does not divide p^a - 1");
  Integer n = qm1 / s * r;
  DigitLambda out;
  unsigned long total = 0;
  for (unsigned t = 0; t < a; ++t) {
    unsigned long digit = mpz_fdiv_q_ui(n.get_mpz_t(), n.get_mpz_t(), p);
    out.digits.push_back(digit);
    total += digit;
  }
  out.lambda = Rational(static_cast<long>(total), static_cast<long>(a) * static_cast<long>(p - 1));
  out.lambda.canonicalize();
  return out;
}

}  // namespace hsnp
