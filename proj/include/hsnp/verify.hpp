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

// Verification drivers behind the command-line tool: polygon reports,
// parameter sweeps, convergence tables and the self test.

#ifndef HSNP_VERIFY_HPP
#define HSNP_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "hsnp/curves.hpp"
#include "hsnp/exp_sums.hpp"
#include "hsnp/hs_polygons.hpp"
#include "hsnp/polygon.hpp"

namespace hsnp {

/// Convention used by reports: affine line for one pole, torus otherwise.
inline Convention default_convention(long d2) { return d2 > 0 ? Convention::kTorus : Convention::kAffine; }

/// max over breakpoints of |a - b|.
Rational max_abs_gap(const Polygon& a, const Polygon& b);

struct HsReport {
  HSParams params;
  Polygon hs;
  Polygon hp;
  bool length_ok = false;
  /// Vacuous when d2 = 0.
  bool has_end_slopes = false;
  bool symmetric = false;
  bool split_identity = false;
  bool equals_hp = false;
  bool hp_iff_nu_one = false;
  bool ok() const { return length_ok && has_end_slopes && symmetric && split_identity && hp_iff_nu_one; }
};

HsReport hs_report(const HSParams& params);

struct NewtonReport {
  LaurentPolynomial P;
  long s = 1;
  Convention convention = Convention::kTorus;
  Route route = Route::kDirect;
  LPolynomial L;
  Polygon np;
  Polygon hs;
  Polygon hp;
  bool np_above_hs = false;
  bool hs_above_hp = false;
  bool equal = false;
  bool predicate = false;
};

NewtonReport newton_report(const LaurentPolynomial& P, long s, Convention convention, const LOptions& options = {});

struct SweepConfig {
  std::vector<unsigned long> primes{3, 5, 7, 11, 13};
  std::vector<long> s_values{1, 2, 3, 4};
  /// Keep only cells with p mod s in this list (empty: all).
  std::vector<long> nu_filter;
  std::vector<std::pair<long, long>> degrees{{1, 0}, {2, 0}, {3, 0}, {1, 1}, {2, 1}};
  unsigned samples = 20;
  std::uint64_t seed = 1;
  std::uint64_t cap = kDefaultCap;
  /// Samples per cell (s > 1) that also run the splitting check.
  unsigned split_samples = 5;
  bool stickelberger = true;
  /// Worker threads; 0 picks the hardware concurrency.
  unsigned jobs = 0;
  std::string json_path;
  std::string svg_path;
};

struct SampleRecord {
  unsigned index = 0;
  std::vector<std::uint64_t> coeffs;
  std::string poly;
  Polygon np;
  bool above = false;
  bool equal = false;
  Rational gap = 0;
  /// Empty when not run.
  std::optional<bool> split_ok;
  std::string split_note;
};

struct CellRecord {
  unsigned long p = 0;
  long s = 1;
  long d1 = 1;
  long d2 = 0;
  long nu = 1;
  Convention convention = Convention::kAffine;
  /// "ok", "skipped" or "error".
  std::string status = "ok";
  std::string reason;
  Route route = Route::kDirect;
  Polygon hs;
  Polygon hp;
  bool predicate = false;
  std::vector<SampleRecord> samples;
  unsigned above_count = 0;
  unsigned equal_count = 0;
  bool equality_consistent = false;
  unsigned split_run = 0;
  unsigned split_passed = 0;
  unsigned split_skipped = 0;
};

struct StickelbergerRecord {
  unsigned long p = 0;
  long s = 1;
  Polygon np;
  Polygon expected;
  bool np_ok = false;
  unsigned gauss_checked = 0;
  unsigned gauss_passed = 0;
  std::string status = "ok";
  std::string reason;
  bool ok() const { return status != "ok" || (np_ok && gauss_checked == gauss_passed); }
};

struct Reproducer {
  unsigned long p = 0;
  long s = 1;
  long d1 = 1;
  long d2 = 0;
  unsigned sample = 0;
  std::vector<std::uint64_t> coeffs;
  std::string what;
};

struct SweepReport {
  SweepConfig config;
  std::vector<CellRecord> cells;
  std::vector<StickelbergerRecord> stickelberger;
  unsigned total_samples = 0;
  unsigned dominance_failures = 0;
  unsigned equality_mismatch_cells = 0;
  unsigned split_failures = 0;
  unsigned stickelberger_failures = 0;
  unsigned skipped_cells = 0;
  unsigned error_cells = 0;
  std::optional<Reproducer> reproducer;
  bool ok() const {
    return dominance_failures == 0 && equality_mismatch_cells == 0 && split_failures == 0 &&
           stickelberger_failures == 0 && error_cells == 0;
  }
};

/// Deterministic RNG for one cell.
std::mt19937_64 cell_rng(std::uint64_t seed, unsigned long p, long s, long d1, long d2);

CellRecord run_cell(const SweepConfig& config, unsigned long p, long s, long d1, long d2);
StickelbergerRecord stickelberger_check(unsigned long p, long s, std::uint64_t cap = kDefaultCap);
SweepReport sweep(const SweepConfig& config);

struct ConvergeRow {
  unsigned long p = 0;
  Polygon np;
  Polygon hs;
  Rational gap = 0;
  Rational scaled_gap = 0;
  bool bound_ok = false;
  Route route = Route::kDirect;
};

struct ConvergeReport {
  RationalLaurent P;
  long s = 1;
  long nu = 1;
  Rational bound = 0;
  std::vector<ConvergeRow> rows;
  bool nonincreasing = false;
  bool final_smaller = false;
  bool bound_ok = false;
  bool ok() const { return nonincreasing && final_smaller && bound_ok; }
};

/// Primes must all be nu mod s and coprime to s d1 d2.
ConvergeReport converge(const RationalLaurent& P, long s, long nu, const std::vector<unsigned long>& primes,
                        const LOptions& options = {});

struct SplitReport {
  LaurentPolynomial P;
  long s = 1;
  Convention convention = Convention::kTorus;
  SplitCheck check;
};

SplitReport split_report(const LaurentPolynomial& P, long s, Convention convention, const LOptions& options = {});

struct SelftestLine {
  std::string name;
  bool pass = false;
  std::string detail;
};

std::vector<SelftestLine> selftest();

}  // namespace hsnp

#endif  // HSNP_VERIFY_HPP
