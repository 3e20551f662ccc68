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


#include <random>

#include "doctest.h"
#include "hsnp/matrix_checks.hpp"

using namespace hsnp;

namespace {

QMatrix scalar(long v) {
  QMatrix m(1);
  m(0, 0) = v;
  return m;
}

}  // namespace

TEST_CASE("fredholm determinant") {
  QMatrix A(2);
  A(0, 0) = 1;
  A(0, 1) = 2;
  A(1, 0) = 3;
  A(1, 1) = 4;
  // det(1 - A T) = 1 - 5 T - 2 T^2.
  CHECK(fredholm_det(A) == std::vector<Rational>{1, -5, -2});
  CHECK(determinant(A) == -2);
  CHECK(determinant(QMatrix::identity(3)) == 1);
}

TEST_CASE("block transfer scalar cases") {
  auto B = block_cyclic({scalar(3), scalar(5)});
  CHECK(fredholm_det(B) == std::vector<Rational>{1, 0, -15});
  CHECK(block_transfer_identity({scalar(3), scalar(5)}));
  CHECK(block_transfer_identity({scalar(7)}));
}

TEST_CASE("block transfer random") {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 60; ++t) {
    std::size_t n = 1 + rng() % 3, a = 1 + rng() % 3;
    std::vector<QMatrix> Ms;
    for (std::size_t i = 0; i < a; ++i) Ms.push_back(random_matrix(n, -9, 9, rng));
    CHECK(block_transfer_identity(Ms));
  }
}

TEST_CASE("minor valuation bound") {
  QMatrix D(2);
  D(0, 0) = 3;
  D(1, 1) = 9;
  auto b = minor_valuation_bound({D, D}, 2, 3);
  CHECK(b.holds());
  CHECK(b.bound == b.coefficient);
  CHECK(minor_valuation_bound({D}, 0, 3).holds());
  std::mt19937_64 rng(2);
  for (int t = 0; t < 60; ++t) {
    std::size_t n = 1 + rng() % 3, a = 1 + rng() % 3;
    std::vector<QMatrix> Ms;
    for (std::size_t i = 0; i < a; ++i) Ms.push_back(random_valued_matrix(n, 5, 2, 6, rng));
    for (std::size_t k = 0; k <= n; ++k) CHECK(minor_valuation_bound(Ms, k, 5).holds());
  }
}
