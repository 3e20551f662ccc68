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

#include "hsnp/verify.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <numeric>
#include <thread>
#include <tuple>

#include "hsnp/errors.hpp"
#include "hsnp/local_ring.hpp"
#include "hsnp/matrix_checks.hpp"
#include "hsnp/report.hpp"
#include "hsnp/residue_cycles.hpp"

namespace hsnp {

namespace {

long nu_of(unsigned long p, long s) { return s == 1 ? 1 : static_cast<long>(p % static_cast<unsigned long>(s)); }

bool coprime_cell(unsigned long p, long s, long d1, long d2) {
  std::uint64_t m = static_cast<std::uint64_t>(s) * static_cast<std::uint64_t>(d1) *
                    static_cast<std::uint64_t>(std::max<long>(d2, 1));
  return m % p != 0;
}

bool safe_above(const Polygon& a, const Polygon& b) {
  try {
    return lies_above(a, b);
  } catch (const IncomparableError&) {
    return false;
  }
}

Rational safe_gap(const Polygon& a, const Polygon& b) {
  try {
    return max_abs_gap(a, b);
  } catch (const IncomparableError&) {
    return -1;
  }
}

std::map<Rational, Rational> slope_lengths(const Polygon& P) {
  std::map<Rational, Rational> m;
  for (const auto& seg : P.segments()) m[seg.slope] += seg.length;
  return m;
}

}  // namespace

Rational max_abs_gap(const Polygon& a, const Polygon& b) {
  Rational x = max_vertex_gap(a, b);
  Rational y = max_vertex_gap(b, a);
  return x > y ? x : y;
}

HsReport hs_report(const HSParams& params) {
  HsReport r;
  r.params = params;
  r.hs = hs_polygon(params);
  r.hp = hodge_polygon(params.s * params.d1, params.s * params.d2);
  const long want = params.d2 > 0 ? params.s * (params.d1 + params.d2) : params.s * params.d1 - 1;
  r.length_ok = r.hs.length() == Rational(want);
  auto lens = slope_lengths(r.hs);
  if (params.d2 > 0) {
    r.has_end_slopes = lens.count(Rational(0)) && lens.count(Rational(1)) && lens[Rational(0)] >= 1 &&
                       lens[Rational(1)] >= 1;
    r.symmetric = true;
    for (const auto& [slope, len] : lens) {
      Rational mirror = Rational(1) - slope;
      auto it = lens.find(mirror);
      if (it == lens.end() || it->second != len) r.symmetric = false;
    }
  } else {
    r.has_end_slopes = true;
    r.symmetric = true;
  }
  r.split_identity = hs_split_identity(params);
  r.equals_hp = r.hs == r.hp;
  const bool nu_one = params.s == 1 || ((params.nu % params.s) + params.s) % params.s == 1;
  r.hp_iff_nu_one = r.equals_hp == nu_one;
  return r;
}

NewtonReport newton_report(const LaurentPolynomial& P, long s, Convention convention, const LOptions& options) {
  NewtonReport r;
  r.P = P;
  r.s = s;
  r.convention = convention;
  RoutedL routed = l_polynomial_routed(P, s, convention, Route::kAuto, options);
  r.route = routed.route;
  r.L = std::move(routed.L);
  r.np = newton_polygon(r.L);
  HSParams hp{P.d1, P.d2, s, nu_of(P.p, s)};
  r.hs = hs_polygon(hp);
  r.hp = hodge_polygon(s * P.d1, s * P.d2);
  r.np_above_hs = safe_above(r.np, r.hs);
  r.hs_above_hp = safe_above(r.hs, r.hp);
  r.equal = r.np == r.hs;
  r.predicate = coincidence_predicate(P.p, hp);
  return r;
}

std::mt19937_64 cell_rng(std::uint64_t seed, unsigned long p, long s, long d1, long d2) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed & 0xffffffffU), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(s), static_cast<std::uint32_t>(d1),
                    static_cast<std::uint32_t>(d2)};
  return std::mt19937_64(seq);
}

CellRecord run_cell(const SweepConfig& config, unsigned long p, long s, long d1, long d2) {
  CellRecord c;
  c.p = p;
  c.s = s;
  c.d1 = d1;
  c.d2 = d2;
  c.nu = nu_of(p, s);
  c.convention = default_convention(d2);
  if (!coprime_cell(p, s, d1, d2)) {
    c.status = "skipped";
    c.reason = "p divides s*d1*max(d2,1)";
    return c;
  }
  HSParams params{d1, d2, s, c.nu};
  c.hs = hs_polygon(params);
  c.hp = hodge_polygon(s * d1, s * d2);
  c.predicate = coincidence_predicate(p, params);
  LOptions options;
  options.cap = config.cap;
  auto rng = cell_rng(config.seed, p, s, d1, d2);
  std::vector<LaurentPolynomial> polys;
  for (unsigned i = 0; i < config.samples; ++i) polys.push_back(random_laurent(p, 1, d1, d2, rng));
  try {
    for (unsigned i = 0; i < config.samples; ++i) {
      const LaurentPolynomial& P = polys[i];
      SampleRecord rec;
      rec.index = i;
      rec.coeffs = P.coeffs;
      rec.poly = P.str();
      RoutedL routed = l_polynomial_routed(P, s, c.convention, Route::kAuto, options);
      c.route = routed.route;
      rec.np = newton_polygon(routed.L);
      rec.above = safe_above(rec.np, c.hs);
      rec.equal = rec.np == c.hs;
      rec.gap = safe_gap(rec.np, c.hs);
      if (rec.above) ++c.above_count;
      if (rec.equal) ++c.equal_count;
      if (s > 1 && i < config.split_samples) {
        try {
          SplitCheck chk = splitting_check(P, s, c.convention, options);
          rec.split_ok = chk.ok();
          if (!chk.polynomial_identity) rec.split_note = "polynomial identity fails";
          else if (!chk.sum_identity) rec.split_note = "sum identity fails";
          ++c.split_run;
          if (chk.ok()) ++c.split_passed;
        } catch (const SizeCapError& e) {
          rec.split_note = "direct side beyond cap";
          ++c.split_skipped;
        }
      }
      c.samples.push_back(std::move(rec));
    }
  } catch (const SizeCapError& e) {
    c.status = "skipped";
    c.reason = e.what();
    c.samples.clear();
    c.above_count = c.equal_count = c.split_run = c.split_passed = c.split_skipped = 0;
    return c;
  } catch (const Error& e) {
    c.status = "error";
    c.reason = e.what();
    return c;
  }
  c.equality_consistent = c.predicate ? c.equal_count == config.samples : c.equal_count == 0;
  return c;
}

StickelbergerRecord stickelberger_check(unsigned long p, long s, std::uint64_t cap) {
  StickelbergerRecord r;
  r.p = p;
  r.s = s;
  if (static_cast<unsigned long>(s) % p == 0) {
    r.status = "skipped";
    r.reason = "p divides s";
    return r;
  }
  LOptions options;
  options.cap = cap;
  try {
    auto X = LaurentPolynomial::make(p, 1, 1, 0, {0, 1});
    r.np = newton_polygon(l_polynomial_routed(X, s, Convention::kAffine, Route::kAuto, options).L);
    auto dec = cycle_decomposition(s, nu_of(p, s));
    std::vector<Segment> segs;
    for (const auto& cyc : dec.cycles())
      if (cyc.elements.front() != 0) segs.push_back({cyc.lambda, Rational(static_cast<long>(cyc.length()))});
    r.expected = Polygon::from_segments(segs);
    r.np_ok = r.np == r.expected;
    const unsigned a = s == 1 ? 1 : static_cast<unsigned>(multiplicative_order(p % static_cast<unsigned long>(s),
                                                                               static_cast<std::uint64_t>(s)));
    auto model = LocalRingModel::anchored(p, static_cast<unsigned long>(s), a);
    for (long rr = 0; rr < s; ++rr) {
      BicyclotomicInteger G = gauss_sum(p, a, rr, s, cap);
      Valuation v = G.in_prime_subring() ? pi_valuation(G.to_cyclotomic()) : local_valuation(G, *model);
      ++r.gauss_checked;
      if (v.is_finite() && v.value() / a == digit_lambda(p, a, rr, s).lambda) ++r.gauss_passed;
    }
  } catch (const SizeCapError& e) {
    r.status = "skipped";
    r.reason = e.what();
  }
  return r;
}

SweepReport sweep(const SweepConfig& config) {
  SweepReport rep;
  rep.config = config;
  std::vector<std::tuple<unsigned long, long, long, long>> keys;
  std::vector<unsigned long> primes = config.primes;
  std::vector<long> svals = config.s_values;
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  std::sort(svals.begin(), svals.end());
  svals.erase(std::unique(svals.begin(), svals.end()), svals.end());
  for (auto p : primes) {
    if (!is_prime(p)) throw InputError("sweep prime " + std::to_string(p) + " is not prime");
    for (long s : svals) {
      if (s < 1) throw InputError("s must be positive");
      if (!config.nu_filter.empty() &&
          std::find(config.nu_filter.begin(), config.nu_filter.end(), nu_of(p, s)) == config.nu_filter.end())
        continue;
      for (auto [d1, d2] : config.degrees) keys.emplace_back(p, s, d1, d2);
    }
  }
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());

  rep.cells.resize(keys.size());
  unsigned jobs = config.jobs ? config.jobs : std::max(1U, std::thread::hardware_concurrency());
  jobs = std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(keys.size(), 1)));
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= keys.size()) return;
      auto [p, s, d1, d2] = keys[i];
      rep.cells[i] = run_cell(config, p, s, d1, d2);
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  if (config.stickelberger) {
    for (auto p : primes)
      for (long s : svals) rep.stickelberger.push_back(stickelberger_check(p, s, config.cap));
  }

  for (const auto& c : rep.cells) {
    if (c.status == "skipped") {
      ++rep.skipped_cells;
      continue;
    }
    if (c.status == "error") {
      ++rep.error_cells;
      if (!rep.reproducer) rep.reproducer = Reproducer{c.p, c.s, c.d1, c.d2, 0, {}, "error: " + c.reason};
      continue;
    }
    rep.total_samples += static_cast<unsigned>(c.samples.size());
    for (const auto& smp : c.samples) {
      if (!smp.above) {
        ++rep.dominance_failures;
        if (!rep.reproducer || rep.reproducer->what.rfind("dominance", 0) != 0)
          rep.reproducer = Reproducer{c.p, c.s, c.d1, c.d2, smp.index, smp.coeffs, "dominance: NP below HS"};
      }
      if (smp.split_ok && !*smp.split_ok) ++rep.split_failures;
    }
    if (!c.equality_consistent) ++rep.equality_mismatch_cells;
  }
  if (!rep.reproducer) {
    for (const auto& c : rep.cells) {
      if (c.status != "ok") continue;
      for (const auto& smp : c.samples) {
        bool bad_eq = !c.equality_consistent && smp.equal != c.predicate;
        bool bad_split = smp.split_ok && !*smp.split_ok;
        if (bad_eq || bad_split) {
          rep.reproducer = Reproducer{c.p, c.s, c.d1, c.d2, smp.index, smp.coeffs,
                                      bad_eq ? (c.predicate ? "equality: NP differs from HS although predicted equal"
                                                            : "equality: NP equals HS although predicted strict")
                                             : "split: " + smp.split_note};
          break;
        }
      }
      if (rep.reproducer) break;
    }
  }
  for (const auto& st : rep.stickelberger)
    if (!st.ok()) ++rep.stickelberger_failures;
  return rep;
}

ConvergeReport converge(const RationalLaurent& P, long s, long nu, const std::vector<unsigned long>& primes,
                        const LOptions& options) {
  if (primes.empty()) throw InputError("no primes given");
  ConvergeReport r;
  r.P = P;
  r.s = s;
  r.nu = nu;
  r.bound = Rational(2 * (P.d1 + P.d2) * (P.d1 + P.d2));
  HSParams params{P.d1, P.d2, s, nu};
  Polygon hs = hs_polygon(params);
  for (auto p : primes) {
    if (!is_prime(p)) throw InputError(std::to_string(p) + " is not prime");
    if (nu_of(p, s) != ((nu % s) + s) % s && s > 1)
      throw InputError(std::to_string(p) + " is not " + std::to_string(nu) + " mod " + std::to_string(s));
    if (!coprime_cell(p, s, P.d1, P.d2)) throw DivisibilityError(std::to_string(p) + " divides s*d1*d2");
    LaurentPolynomial Pp = P.reduce(p);
    RoutedL routed = l_polynomial_routed(Pp, s, default_convention(P.d2), Route::kAuto, options);
    ConvergeRow row;
    row.p = p;
    row.route = routed.route;
    row.np = newton_polygon(routed.L);
    row.hs = hs;
    row.gap = max_abs_gap(row.np, hs);
    row.scaled_gap = row.gap * Rational(static_cast<long>(p) - 1);
    row.bound_ok = row.scaled_gap <= r.bound;
    r.rows.push_back(std::move(row));
  }
  r.nonincreasing = true;
  r.bound_ok = true;
  for (std::size_t i = 0; i < r.rows.size(); ++i) {
    if (i > 0 && r.rows[i].gap > r.rows[i - 1].gap) r.nonincreasing = false;
    if (!r.rows[i].bound_ok) r.bound_ok = false;
  }
  r.final_smaller = r.rows.back().gap < r.rows.front().gap;
  return r;
}

SplitReport split_report(const LaurentPolynomial& P, long s, Convention convention, const LOptions& options) {
  SplitReport r;
  r.P = P;
  r.s = s;
  r.convention = convention;
  r.check = splitting_check(P, s, convention, options);
  return r;
}

// ------------------------------------------------------------ self test

namespace {

// FNV-1a over the golden sweep JSON.
std::uint64_t fnv1a(const std::string& text) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  return h;
}

constexpr std::uint64_t kGoldenSweepDigest = 7940562502690195903ULL;

SweepConfig golden_config() {
  SweepConfig c;
  c.primes = {3, 5};
  c.s_values = {1, 2};
  c.degrees = {{1, 0}, {2, 0}, {1, 1}};
  c.samples = 3;
  c.seed = 2026;
  c.split_samples = 1;
  c.jobs = 1;
  return c;
}

}  // namespace

std::vector<SelftestLine> selftest() {
  std::vector<SelftestLine> out;
  auto add = [&](std::string name, auto&& fn) {
    SelftestLine line;
    line.name = std::move(name);
    try {
      line.pass = fn(line.detail);
    } catch (const std::exception& e) {
      line.pass = false;
      line.detail = e.what();
    }
    out.push_back(std::move(line));
  };
  std::mt19937_64 rng(12345);

  add("ring axioms", [&](std::string&) {
    for (int t = 0; t < 20; ++t) {
      auto rnd = [&](unsigned long p, unsigned long s) {
        BicyclotomicInteger x(p, s);
        std::vector<Integer> c;
        for (std::size_t i = 0; i < (p - 1) * euler_phi(s); ++i)
          c.push_back(Integer(static_cast<long>(uniform_below(rng, 11)) - 5));
        return BicyclotomicInteger(p, s, c);
      };
      auto x = rnd(5, 3), y = rnd(5, 3), z = rnd(5, 3);
      if (!((x * y) * z == x * (y * z))) return false;
      if (!(x * (y + z) == x * y + x * z)) return false;
    }
    return true;
  });
  add("pi valuation of p", [&](std::string& d) {
    for (unsigned long p : {3UL, 5UL, 7UL}) {
      auto v = pi_valuation(CyclotomicInteger::from_integer(p, Integer(p)));
      if (!(v == Valuation(Rational(1)))) {
        d = "p=" + std::to_string(p) + " gives " + v.str();
        return false;
      }
    }
    return true;
  });
  add("local model agrees with pi valuation", [&](std::string&) {
    for (unsigned long p : {3UL, 5UL, 7UL}) {
      auto model = LocalRingModel::lexicographic(p, 1);
      for (int t = 0; t < 20; ++t) {
        std::vector<Integer> c;
        for (unsigned long i = 0; i + 1 < p; ++i) c.push_back(Integer(static_cast<long>(uniform_below(rng, 19)) - 9));
        CyclotomicInteger x(p, c);
        if (x.is_zero()) continue;
        if (!(pi_valuation(x) == local_valuation(BicyclotomicInteger::from_cyclotomic(x, 1), *model))) return false;
      }
    }
    return true;
  });
  add("gauss sum p=5 s=2", [&](std::string& d) {
    auto G = gauss_sum(5, 1, 1, 2);
    auto v = pi_valuation(G.to_cyclotomic());
    d = v.str();
    return v == Valuation(make_rational(1, 2));
  });
  add("stickelberger p=7 s<=6", [&](std::string&) {
    for (long s = 1; s <= 6; ++s)
      if (!stickelberger_check(7, s).ok()) return false;
    return true;
  });
  add("hs example (1,1,3,2)", [&](std::string& d) {
    auto hs = hs_polygon({1, 1, 3, 2});
    d = hs.str();
    return hs == Polygon::from_segments({{Rational(0), Rational(1)}, {make_rational(1, 2), Rational(4)},
                                         {Rational(1), Rational(1)}});
  });
  add("L(x, s=2) over F_3", [&](std::string& d) {
    auto L = l_polynomial(LaurentPolynomial::make(3, 1, 1, 0, {0, 1}), 2, Convention::kAffine);
    d = L.str();
    auto want = CyclotomicInteger::zeta_power(3, 1) - CyclotomicInteger::zeta_power(3, 2);
    return L.degree() == 1 && L.coeffs[1] == BicyclotomicInteger::from_cyclotomic(want, 1);
  });
  add("split identities", [&](std::string&) {
    return splitting_check(LaurentPolynomial::make(3, 1, 1, 1, {1, 0, 1}), 2, Convention::kTorus).ok() &&
           splitting_check(LaurentPolynomial::make(5, 1, 1, 0, {0, 1}), 4, Convention::kAffine).ok();
  });
  add("matrix checks", [&](std::string&) {
    for (int t = 0; t < 20; ++t) {
      std::size_t n = 1 + uniform_below(rng, 3);
      std::size_t a = 1 + uniform_below(rng, 3);
      std::vector<QMatrix> Ms;
      for (std::size_t i = 0; i < a; ++i) Ms.push_back(random_matrix(n, -9, 9, rng));
      if (!block_transfer_identity(Ms)) return false;
      std::vector<QMatrix> Vs;
      for (std::size_t i = 0; i < a; ++i) Vs.push_back(random_valued_matrix(n, 3, 2, 4, rng));
      for (std::size_t k = 0; k <= n; ++k)
        if (!minor_valuation_bound(Vs, k, 3).holds()) return false;
    }
    return true;
  });
  add("curve p=3 x+1/x", [&](std::string&) {
    ASCurve C{LaurentPolynomial::make(3, 1, 1, 1, {1, 0, 1}), 1};
    return curve_check(C).ok();
  });
  add("golden sweep report", [&](std::string& d) {
    auto a = sweep_to_json(sweep(golden_config())).dump(2);
    auto b = sweep_to_json(sweep(golden_config())).dump(2);
    std::uint64_t h = fnv1a(a);
    d = "digest " + std::to_string(h);
    return a == b && h == kGoldenSweepDigest;
  });
  return out;
}

}  // namespace hsnp
