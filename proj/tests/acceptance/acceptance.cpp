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


// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>

#include "hsnp/curves.hpp"
#include "hsnp/errors.hpp"
#include "hsnp/local_ring.hpp"
#include "hsnp/matrix_checks.hpp"
#include "hsnp/report.hpp"
#include "hsnp/residue_cycles.hpp"
#include "hsnp/verify.hpp"

using namespace hsnp;

namespace {

using Clock = std::chrono::steady_clock;

int failures = 0;

void run(int id, const std::string& name, double limit_s, const std::function<bool(std::ostringstream&)>& body) {
  std::ostringstream detail;
  auto t0 = Clock::now();
  bool pass = false;
  try {
    pass = body(detail);
  } catch (const std::exception& e) {
    detail << "exception: " << e.what();
  }
  double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  if (secs > limit_s) {
    pass = false;
    detail << " [over time limit " << limit_s << " s]";
  }
  if (!pass) ++failures;
  std::printf("%s %d %s (%.2f s) %s\n", pass ? "PASS" : "FAIL", id, name.c_str(), secs, detail.str().c_str());
  std::fflush(stdout);
}

Rational q(long n, long d = 1) { return make_rational(n, d); }

SweepConfig grid() {
  SweepConfig c;
  c.primes = {3, 5, 7, 11, 13};
  c.s_values = {1, 2, 3, 4};
  c.degrees = {{1, 0}, {2, 0}, {3, 0}, {1, 1}, {2, 1}};
  c.samples = 20;
  c.split_samples = 5;
  c.seed = 1;
  c.stickelberger = false;
  return c;
}

const CellRecord* find_cell(const SweepReport& r, unsigned long p, long s, long d1, long d2) {
  for (const auto& c : r.cells)
    if (c.p == p && c.s == s && c.d1 == d1 && c.d2 == d2) return &c;
  return nullptr;
}

CyclotomicInteger random_cyc(unsigned long p, std::mt19937_64& rng) {
  std::vector<Integer> c;
  for (unsigned long i = 0; i + 1 < p; ++i) c.push_back(Integer(static_cast<long>(rng() % 41) - 20));
  return CyclotomicInteger(p, c);
}

}  // namespace

int main() {
  run(1, "hs polygon combinatorics, s <= 24", 5, [](std::ostringstream& d) {
    unsigned cases = 0, bad = 0;
    for (long s = 1; s <= 24; ++s)
      for (long nu = 1; nu < std::max<long>(s, 2); ++nu) {
        if (std::gcd(nu, s) != 1) continue;
        for (long d1 = 1; d1 <= 3; ++d1)
          for (long d2 = 0; d2 <= 3; ++d2) {
            ++cases;
            if (!hs_report({d1, d2, s, nu}).ok()) {
              if (bad++ == 0) d << "first bad (d1,d2,s,nu)=(" << d1 << "," << d2 << "," << s << "," << nu << ") ";
            }
          }
      }
    d << cases << " parameter sets, " << bad << " bad";
    return bad == 0;
  });

  run(2, "Stickelberger polygons and Gauss sums", 120, [](std::ostringstream& d) {
    unsigned np_cases = 0, np_bad = 0, gauss = 0, gauss_bad = 0;
    for (unsigned long p : {2UL, 3UL, 5UL, 7UL, 11UL, 13UL})
      for (long s = 1; s <= 8; ++s) {
        if (s % static_cast<long>(p) == 0) continue;
        auto rec = stickelberger_check(p, s);
        if (rec.status != "ok") {
          d << "p=" << p << " s=" << s << " skipped; ";
          ++np_bad;
          continue;
        }
        ++np_cases;
        if (!rec.np_ok) ++np_bad;
        if (s <= 6) {
          gauss += rec.gauss_checked;
          gauss_bad += rec.gauss_checked - rec.gauss_passed;
        }
      }
    d << np_cases << " polygons (" << np_bad << " bad), " << gauss << " Gauss sums (" << gauss_bad << " bad)";
    return np_bad == 0 && gauss_bad == 0;
  });

  SweepReport report;
  std::string first_json;
  run(3, "dominance sweep", 900, [&](std::ostringstream& d) {
    report = sweep(grid());
    first_json = sweep_to_json(report).dump(2);
    unsigned total = 0, above = 0;
    for (const auto& c : report.cells) {
      if (c.status != "ok") continue;
      total += static_cast<unsigned>(c.samples.size());
      above += c.above_count;
    }
    d << "above " << above << "/" << total;
    bool ok = above == total && report.error_cells == 0;
    std::string below;
    for (const auto& c : report.cells)
      if (c.status == "ok" && c.above_count < c.samples.size())
        below += " (" + std::to_string(c.p) + "," + std::to_string(c.s) + "," + std::to_string(c.d1) + "," +
                 std::to_string(c.d2) + ")";
    if (!below.empty()) d << ", NP below HS in" << below;
    std::string mismatch;
    for (const auto& c : report.cells)
      if (c.status == "ok" && !c.equality_consistent) {
        mismatch += " (" + std::to_string(c.p) + "," + std::to_string(c.s) + "," + std::to_string(c.d1) + "," +
                    std::to_string(c.d2) + ": " + std::to_string(c.equal_count) + " equal, predicate " +
                    (c.predicate ? "true" : "false") + ")";
        ok = false;
      }
    if (!mismatch.empty()) d << "; equality differs from predicate in" << mismatch;
    auto a = find_cell(report, 13, 2, 3, 0);
    auto b = find_cell(report, 7, 3, 1, 1);
    auto c = find_cell(report, 5, 3, 1, 1);
    bool pinned = a && b && c && a->equal_count == 20 && b->equal_count == 20 && c->equal_count == 0;
    d << "; pinned cells equal counts " << (a ? a->equal_count : 0) << "/20, " << (b ? b->equal_count : 0)
      << "/20, " << (c ? c->equal_count : 99) << "/0";
    d << "; skipped cells " << report.skipped_cells;
    return ok && pinned;
  });

  run(4, "splitting identity", 600, [&](std::ostringstream& d) {
    unsigned run_n = 0, passed = 0, skipped = 0, cells = 0;
    for (const auto& c : report.cells) {
      if (c.status != "ok" || c.s == 1) continue;
      ++cells;
      run_n += c.split_run;
      passed += c.split_passed;
      skipped += c.split_skipped;
    }
    d << passed << "/" << run_n << " exact identities over " << cells << " cells, " << skipped
      << " samples beyond cap";
    return run_n > 0 && passed == run_n;
  });

  run(5, "twisted bound", 300, [](std::ostringstream& d) {
    struct Case {
      unsigned long p;
      long s, r, d1, d2;
    };
    unsigned total = 0, good = 0;
    for (Case c : {Case{5, 2, 1, 2, 1}, Case{7, 3, 1, 1, 1}}) {
      std::mt19937_64 rng(c.p * 1000 + static_cast<unsigned long>(c.s));
      long nu = static_cast<long>(c.p % static_cast<unsigned long>(c.s));
      Polygon ths = twisted_hs_polygon(c.d1, c.d2, c.s, nu, c.r);
      for (int t = 0; t < 50; ++t) {
        auto P = random_laurent(c.p, 1, c.d1, c.d2, rng);
        auto L = twisted_l_polynomial(P, c.r, c.s, Convention::kTorus);
        ++total;
        if (lies_above(newton_polygon(L), ths)) ++good;
      }
    }
    d << good << "/" << total;
    return good == total;
  });

  run(6, "curve zeta numerators", 180, [](std::ostringstream& d) {
    struct Case {
      long s, d1, d2;
    };
    unsigned total = 0, good = 0;
    std::mt19937_64 rng(3);
    for (Case c : {Case{1, 1, 1}, Case{2, 1, 1}, Case{1, 2, 0}}) {
      for (int t = 0; t < 4; ++t) {
        auto P = random_laurent(3, 1, c.d1, c.d2, rng);
        auto r = curve_check(ASCurve{P, c.s});
        ++total;
        if (r.ok()) ++good;
        else d << "bad " << P.str() << " s=" << c.s << "; ";
      }
    }
    d << good << "/" << total << " curves agree";
    return good == total;
  });

  run(7, "matrix checks", 60, [](std::ostringstream& d) {
    std::mt19937_64 rng(7);
    unsigned block = 0, minor = 0;
    for (int t = 0; t < 200; ++t) {
      std::size_t n = 1 + rng() % 4, a = 1 + rng() % 4;
      std::vector<QMatrix> Ms;
      for (std::size_t i = 0; i < a; ++i) Ms.push_back(random_matrix(n, -9, 9, rng));
      if (block_transfer_identity(Ms)) ++block;
    }
    const unsigned long primes[] = {2, 3, 5};
    for (int t = 0; t < 200; ++t) {
      std::size_t n = 1 + rng() % 4, a = 1 + rng() % 3;
      unsigned long p = primes[t % 3];
      std::size_t k = rng() % (n + 1);
      std::vector<QMatrix> Ms;
      for (std::size_t i = 0; i < a; ++i) Ms.push_back(random_valued_matrix(n, p, 3, 9, rng));
      if (minor_valuation_bound(Ms, k, p).holds()) ++minor;
    }
    d << "block transfer " << block << "/200, minor bound " << minor << "/200";
    return block == 200 && minor == 200;
  });

  run(8, "convergence trend", 600, [](std::ostringstream& d) {
    RationalLaurent P{1, 1, {q(1), q(0), q(1)}};
    auto r = converge(P, 3, 2, {5, 11, 17, 23, 29});
    d << "gaps";
    for (const auto& row : r.rows) d << " " << to_string(row.gap);
    d << "; nonincreasing " << (r.nonincreasing ? "yes" : "no") << ", gap*(p-1) within "
      << to_string(r.bound) << " " << (r.bound_ok ? "yes" : "no") << ", gap(29) < gap(5) "
      << (r.final_smaller ? "yes" : "no");
    return r.ok();
  });

  run(9, "valuation oracles", 60, [](std::ostringstream& d) {
    std::mt19937_64 rng(9);
    unsigned agree = 0, additive = 0, checked = 0, pairs = 0;
    bool prime_ok = true;
    for (unsigned long p : {3UL, 5UL, 7UL}) {
      prime_ok = prime_ok && pi_valuation(CyclotomicInteger::from_integer(p, Integer(p))) == Valuation(q(1));
      auto model = LocalRingModel::lexicographic(p, 1);
      for (int t = 0; t < 500; ++t) {
        auto x = random_cyc(p, rng);
        if (x.is_zero()) continue;
        ++checked;
        if (pi_valuation(x) == local_valuation(BicyclotomicInteger::from_cyclotomic(x, 1), *model)) ++agree;
      }
      for (int t = 0; t < 500; ++t) {
        auto x = random_cyc(p, rng), y = random_cyc(p, rng);
        if (x.is_zero() || y.is_zero()) continue;
        ++pairs;
        if (pi_valuation(x * y).value() == pi_valuation(x).value() + pi_valuation(y).value()) ++additive;
      }
    }
    d << "local/pi agree " << agree << "/" << checked << ", additive " << additive << "/" << pairs
      << ", ord(p) = 1 " << (prime_ok ? "yes" : "no");
    return agree == checked && additive == pairs && prime_ok;
  });

  run(10, "deterministic sweep JSON", 900, [&](std::ostringstream& d) {
    auto cfg = grid();
    cfg.jobs = 1;
    std::string second = sweep_to_json(sweep(cfg)).dump(2);
    d << first_json.size() << " bytes, " << (first_json == second ? "identical" : "different");
    return !first_json.empty() && first_json == second;
  });

  std::printf("%d of 10 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
