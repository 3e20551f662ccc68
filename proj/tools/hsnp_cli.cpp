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

// hsnp: command-line front end.
//
// Exit codes: 0 success, 1 a checked statement failed, 2 bad input,
// 3 resource cap exceeded.

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hsnp/errors.hpp"
#include "hsnp/report.hpp"
#include "hsnp/verify.hpp"

namespace {

using namespace hsnp;

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kInput = 2;
constexpr int kCap = 3;

struct Common {
  unsigned long p = 3;
  unsigned a = 1;
  long s = 1;
  long nu = 1;
  long d1 = 1;
  long d2 = 0;
  std::string poly;
  std::string convention;
  std::uint64_t seed = 1;
  std::uint64_t cap = kDefaultCap;
  std::string json_path;
  std::string svg_path;
};

std::vector<std::string> split_list(const std::string& text) {
  std::string t = text;
  for (char& c : t)
    if (c == ',' || c == ';') c = ' ';
  std::istringstream in(t);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

std::uint64_t parse_code(const std::string& w) {
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(w, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != w.size() || w.empty() || w[0] == '-') throw InputError("bad coefficient code '" + w + "'");
  return v;
}

LaurentPolynomial polynomial_from(const Common& c) {
  if (!is_prime(c.p)) throw InputError("p = " + std::to_string(c.p) + " is not prime");
  if (c.poly.empty()) {
    std::mt19937_64 rng(c.seed);
    return random_laurent(c.p, c.a, c.d1, c.d2, rng);
  }
  std::vector<std::uint64_t> codes;
  for (const auto& w : split_list(c.poly)) codes.push_back(parse_code(w));
  return LaurentPolynomial::make(c.p, c.a, c.d1, c.d2, std::move(codes));
}

RationalLaurent rational_from(const std::string& text, long d1, long d2) {
  RationalLaurent P;
  P.d1 = d1;
  P.d2 = d2;
  for (const auto& w : split_list(text)) P.coeffs.push_back(parse_rational(w));
  if (static_cast<long>(P.coeffs.size()) != d1 + d2 + 1)
    throw InputError("expected " + std::to_string(d1 + d2 + 1) + " coefficients a_{-d2}..a_{d1}");
  return P;
}

Convention convention_from(const Common& c) {
  return c.convention.empty() ? default_convention(c.d2) : parse_convention(c.convention);
}

void emit(const Common& c, const Json& j, const std::string& text, const std::vector<LabeledPolygon>& plots,
          const std::string& title) {
  std::cout << text;
  if (!plots.empty()) std::cout << ascii_plot(plots);
  if (!c.json_path.empty()) {
    if (c.json_path == "-") std::cout << j.dump(2) << '\n';
    else write_file(c.json_path, j.dump(2) + "\n");
  }
  if (!c.svg_path.empty()) write_file(c.svg_path, svg_plot(title, plots));
}

const char* yes(bool b) { return b ? "yes" : "no"; }

int cmd_hs(const Common& c) {
  HsReport r = hs_report({c.d1, c.d2, c.s, c.nu});
  std::ostringstream t;
  t << "HS(d1=" << c.d1 << ", d2=" << c.d2 << ", s=" << c.s << ", nu=" << c.nu << ") = " << r.hs.str() << '\n'
    << "HP = " << r.hp.str() << '\n'
    << "length " << yes(r.length_ok) << ", end slopes " << yes(r.has_end_slopes) << ", symmetric "
    << yes(r.symmetric) << ", split identity " << yes(r.split_identity) << ", HS = HP " << yes(r.equals_hp)
    << ", (HS = HP) iff nu = 1 " << yes(r.hp_iff_nu_one) << '\n';
  emit(c, hs_to_json(r), t.str(), {{"HS", r.hs}, {"HP", r.hp}}, "HS and HP");
  return r.ok() ? kOk : kViolation;
}

int cmd_newton(const Common& c) {
  LOptions opt;
  opt.cap = c.cap;
  NewtonReport r = newton_report(polynomial_from(c), c.s, convention_from(c), opt);
  std::ostringstream t;
  t << "P = " << r.P.str() << " over F_" << r.P.p << (r.P.a > 1 ? "^" + std::to_string(r.P.a) : "") << ", s = " << r.s
    << ", " << to_string(r.convention) << ", route " << to_string(r.route) << '\n'
    << "L = " << r.L.str() << '\n'
    << "NP = " << r.np.str() << '\n'
    << "HS = " << r.hs.str() << '\n'
    << "HP = " << r.hp.str() << '\n'
    << "NP above HS " << yes(r.np_above_hs) << ", HS above HP " << yes(r.hs_above_hp) << ", NP = HS "
    << yes(r.equal) << ", predicted equal " << yes(r.predicate) << '\n';
  emit(c, newton_to_json(r), t.str(), {{"NP", r.np}, {"HS", r.hs}, {"HP", r.hp}}, "NP, HS and HP");
  return r.np_above_hs && r.hs_above_hp ? kOk : kViolation;
}

int cmd_sweep(const Common& c, SweepConfig cfg) {
  if (!c.json_path.empty()) cfg.json_path = c.json_path;
  if (!c.svg_path.empty()) cfg.svg_path = c.svg_path;
  SweepReport r = sweep(cfg);
  std::ostringstream t;
  for (const auto& cell : r.cells) {
    t << "p=" << cell.p << " s=" << cell.s << " (" << cell.d1 << "," << cell.d2 << ") ";
    if (cell.status != "ok") {
      t << cell.status << ": " << cell.reason << '\n';
      continue;
    }
    t << "above " << cell.above_count << "/" << cell.samples.size() << " equal " << cell.equal_count << "/"
      << cell.samples.size() << " predicate " << yes(cell.predicate)
      << (cell.equality_consistent ? "" : " MISMATCH");
    if (cell.split_run + cell.split_skipped > 0)
      t << " split " << cell.split_passed << "/" << cell.split_run << " (skipped " << cell.split_skipped << ")";
    t << '\n';
  }
  for (const auto& st : r.stickelberger)
    if (!st.ok()) t << "stickelberger p=" << st.p << " s=" << st.s << " FAILED\n";
  t << "samples " << r.total_samples << ", dominance failures " << r.dominance_failures << ", equality mismatch cells "
    << r.equality_mismatch_cells << ", split failures " << r.split_failures << ", stickelberger failures "
    << r.stickelberger_failures << ", skipped " << r.skipped_cells << ", errors " << r.error_cells << '\n';
  if (r.reproducer) {
    const auto& x = *r.reproducer;
    t << "first failure: p=" << x.p << " s=" << x.s << " d1=" << x.d1 << " d2=" << x.d2 << " sample " << x.sample
      << " (" << x.what << ")";
    if (!x.coeffs.empty()) {
      t << "\n  reproduce: hsnp newton --p " << x.p << " --s " << x.s << " --d1 " << x.d1 << " --d2 " << x.d2
        << " --poly ";
      for (std::size_t i = 0; i < x.coeffs.size(); ++i) t << (i ? "," : "") << x.coeffs[i];
    }
    t << '\n';
  }
  std::cout << t.str();
  if (!cfg.json_path.empty()) {
    std::string body = sweep_to_json(r).dump(2) + "\n";
    if (cfg.json_path == "-") std::cout << body;
    else write_file(cfg.json_path, body);
  }
  if (!cfg.svg_path.empty()) {
    std::vector<LabeledPolygon> plots;
    if (r.reproducer) {
      for (const auto& cell : r.cells)
        if (cell.p == r.reproducer->p && cell.s == r.reproducer->s && cell.d1 == r.reproducer->d1 &&
            cell.d2 == r.reproducer->d2 && !cell.samples.empty()) {
          plots.push_back({"NP", cell.samples[std::min<std::size_t>(r.reproducer->sample, cell.samples.size() - 1)].np});
          plots.push_back({"HS", cell.hs});
        }
    } else {
      for (const auto& cell : r.cells)
        if (cell.status == "ok") {
          plots.push_back({"HS p=" + std::to_string(cell.p) + " s=" + std::to_string(cell.s), cell.hs});
          break;
        }
    }
    write_file(cfg.svg_path, svg_plot("sweep", plots));
  }
  if (r.error_cells > 0 && r.dominance_failures == 0 && r.equality_mismatch_cells == 0 && r.split_failures == 0 &&
      r.stickelberger_failures == 0)
    return kViolation;
  return r.ok() ? kOk : kViolation;
}

int cmd_converge(const Common& c, const std::string& primes_text) {
  std::string poly = c.poly.empty() ? "1,0,1" : c.poly;
  long d1 = c.poly.empty() ? 1 : c.d1;
  long d2 = c.poly.empty() ? 1 : c.d2;
  std::vector<unsigned long> primes;
  for (const auto& w : split_list(primes_text)) primes.push_back(parse_code(w));
  LOptions opt;
  opt.cap = c.cap;
  ConvergeReport r = converge(rational_from(poly, d1, d2), c.s, c.nu, primes, opt);
  std::ostringstream t;
  t << "s=" << r.s << " nu=" << r.nu << " bound 2(d1+d2)^2 = " << to_string(r.bound) << '\n';
  for (const auto& row : r.rows)
    t << "p=" << row.p << " NP=" << row.np.str() << " gap=" << to_string(row.gap)
      << " gap*(p-1)=" << to_string(row.scaled_gap) << (row.bound_ok ? "" : " OVER BOUND") << '\n';
  t << "nonincreasing " << yes(r.nonincreasing) << ", last below first " << yes(r.final_smaller) << ", bound "
    << yes(r.bound_ok) << '\n';
  std::vector<LabeledPolygon> plots;
  if (!r.rows.empty()) {
    plots.push_back({"HS", r.rows.front().hs});
    for (const auto& row : r.rows) plots.push_back({"NP p=" + std::to_string(row.p), row.np});
  }
  emit(c, converge_to_json(r), t.str(), plots, "convergence");
  return r.ok() ? kOk : kViolation;
}

int cmd_curve(const Common& c) {
  LOptions opt;
  opt.cap = c.cap;
  ASCurve curve{polynomial_from(c), c.s};
  if (curve.P.a != 1) throw InputError("curve checks work over F_p");
  CurveReport r = curve_check(curve, opt);
  std::ostringstream t;
  t << "y^p - y = " << curve.P.str() << " (x -> x^" << c.s << ") over F_" << curve.P.p << ", genus " << r.genus << '\n';
  t << "#C(F_{p^k}) =";
  for (const auto& n : r.counts) t << ' ' << to_string(n);
  t << '\n'
    << "numerator = " << r.numerator.str() << '\n'
    << "point count and character product agree " << yes(r.methods_agree) << '\n'
    << "NP/(p-1) = " << r.scaled.str() << '\n'
    << "HS = " << r.hs.str() << '\n'
    << "above " << yes(r.above) << ", equal " << yes(r.equal) << ", predicted " << yes(r.predicate) << '\n';
  emit(c, curve_to_json(r, curve), t.str(), {{"NP/(p-1)", r.scaled}, {"HS", r.hs}}, "curve");
  return r.ok() ? kOk : kViolation;
}

int cmd_stickelberger(const Common& c) {
  if (!is_prime(c.p)) throw InputError("p = " + std::to_string(c.p) + " is not prime");
  if (c.s < 1) throw InputError("s must be positive");
  StickelbergerRecord r = stickelberger_check(c.p, c.s, c.cap);
  if (r.status != "ok") throw SizeCapError(r.reason);
  std::ostringstream t;
  t << "NP(L(x^" << c.s << ")) over F_" << c.p << " = " << r.np.str() << '\n'
    << "cycle polygon = " << r.expected.str() << '\n'
    << "match " << yes(r.np_ok) << ", Gauss sums " << r.gauss_passed << "/" << r.gauss_checked << '\n';
  emit(c, stickelberger_to_json(r), t.str(), {{"NP", r.np}, {"cycles", r.expected}}, "Stickelberger");
  return r.ok() ? kOk : kViolation;
}

int cmd_split(const Common& c) {
  LOptions opt;
  opt.cap = c.cap;
  SplitReport r = split_report(polynomial_from(c), c.s, convention_from(c), opt);
  std::ostringstream t;
  t << "P = " << r.P.str() << ", s = " << r.s << ", " << to_string(r.convention) << '\n'
    << "direct  = " << r.check.direct.str() << '\n';
  for (const auto& f : r.check.factors)
    t << "  r=" << f.representative << " (cycle length " << f.length << "): " << f.factor.str() << '\n';
  t << "product = " << r.check.product.str() << '\n'
    << "polynomial identity " << yes(r.check.polynomial_identity) << ", sum identity " << yes(r.check.sum_identity)
    << '\n';
  emit(c, split_to_json(r), t.str(), {}, "split");
  return r.check.ok() ? kOk : kViolation;
}

int cmd_selftest(const Common& c) {
  auto lines = selftest();
  bool all = true;
  std::ostringstream t;
  for (const auto& l : lines) {
    t << (l.pass ? "PASS " : "FAIL ") << l.name;
    if (!l.pass && !l.detail.empty()) t << " (" << l.detail << ")";
    t << '\n';
    all = all && l.pass;
  }
  emit(c, selftest_to_json(lines), t.str(), {}, "selftest");
  return all ? kOk : kViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hasse-Stickelberger and Newton polygon verifier"};
  app.require_subcommand(1);
  Common c;
  std::string config_path;
  std::string primes_text = "5,11,17,23,29";
  std::string sweep_primes;
  std::string sweep_s;
  unsigned samples = 0;
  unsigned jobs = 0;

  auto add_common = [&](CLI::App* sub, bool poly) {
    sub->add_option("--s", c.s, "power in x -> x^s")->check(CLI::PositiveNumber);
    sub->add_option("--d1", c.d1, "degree in x")->check(CLI::PositiveNumber);
    sub->add_option("--d2", c.d2, "degree in 1/x")->check(CLI::NonNegativeNumber);
    sub->add_option("--cap", c.cap, "largest field size to enumerate");
    sub->add_option("--json", c.json_path, "write JSON report ('-' for stdout)");
    sub->add_option("--svg", c.svg_path, "write SVG plot");
    if (poly) {
      sub->add_option("--p", c.p, "characteristic");
      sub->add_option("--a", c.a, "base field F_{p^a}")->check(CLI::PositiveNumber);
      sub->add_option("--poly", c.poly, "coefficients a_{-d2}..a_{d1}");
      sub->add_option("--seed", c.seed, "seed for a random polynomial when --poly is absent");
      sub->add_option("--convention", c.convention, "torus or affine");
    }
  };

  auto* hs = app.add_subcommand("hs", "Hasse-Stickelberger polygon and its checks");
  add_common(hs, false);
  hs->add_option("--nu", c.nu, "p mod s");
  auto* newton = app.add_subcommand("newton", "Newton polygon of an L-function against HS and HP");
  add_common(newton, true);
  auto* sweep_cmd = app.add_subcommand("sweep", "random sweep over a parameter grid");
  sweep_cmd->add_option("--config", config_path, "JSON config file");
  sweep_cmd->add_option("--primes", sweep_primes, "comma separated primes");
  sweep_cmd->add_option("--s-values", sweep_s, "comma separated s");
  sweep_cmd->add_option("--samples", samples, "samples per cell");
  sweep_cmd->add_option("--seed", c.seed, "seed");
  sweep_cmd->add_option("--cap", c.cap, "largest field size to enumerate");
  sweep_cmd->add_option("--jobs", jobs, "worker threads");
  sweep_cmd->add_option("--json", c.json_path, "write JSON report ('-' for stdout)");
  sweep_cmd->add_option("--svg", c.svg_path, "write SVG plot of the first failure");
  auto* conv = app.add_subcommand("converge", "gap between NP and HS as p grows in a residue class");
  add_common(conv, false);
  conv->add_option("--nu", c.nu, "residue of p mod s");
  conv->add_option("--poly", c.poly, "rational coefficients a_{-d2}..a_{d1}");
  conv->add_option("--primes", primes_text, "comma separated primes");
  auto* curve = app.add_subcommand("curve", "zeta numerator of y^p - y = P(x^s)");
  add_common(curve, true);
  auto* stick = app.add_subcommand("stickelberger", "NP of L(x^s) and Gauss sum valuations");
  stick->add_option("--p", c.p, "characteristic");
  stick->add_option("--s", c.s, "s")->check(CLI::PositiveNumber);
  stick->add_option("--cap", c.cap, "largest field size to enumerate");
  stick->add_option("--json", c.json_path, "write JSON report ('-' for stdout)");
  stick->add_option("--svg", c.svg_path, "write SVG plot");
  auto* split = app.add_subcommand("split", "L(P(x^s)) against the product of twisted factors");
  add_common(split, true);
  auto* self = app.add_subcommand("selftest", "built-in consistency checks");
  self->add_option("--json", c.json_path, "write JSON report ('-' for stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInput;
  }

  try {
    if (*hs) return cmd_hs(c);
    if (*newton) return cmd_newton(c);
    if (*sweep_cmd) {
      SweepConfig cfg;
      if (!config_path.empty()) cfg = load_config(config_path, cfg);
      if (!sweep_primes.empty()) {
        cfg.primes.clear();
        for (const auto& w : split_list(sweep_primes)) cfg.primes.push_back(parse_code(w));
      }
      if (!sweep_s.empty()) {
        cfg.s_values.clear();
        for (const auto& w : split_list(sweep_s)) cfg.s_values.push_back(static_cast<long>(parse_code(w)));
      }
      if (samples) cfg.samples = samples;
      if (sweep_cmd->count("--seed")) cfg.seed = c.seed;
      if (sweep_cmd->count("--cap")) cfg.cap = c.cap;
      if (jobs) cfg.jobs = jobs;
      return cmd_sweep(c, cfg);
    }
    if (*conv) return cmd_converge(c, primes_text);
    if (*curve) return cmd_curve(c);
    if (*stick) return cmd_stickelberger(c);
    if (*split) return cmd_split(c);
    if (*self) return cmd_selftest(c);
  } catch (const SizeCapError& e) {
    std::cerr << "hsnp: resource cap: " << e.what() << '\n';
    return kCap;
  } catch (const InputError& e) {
    std::cerr << "hsnp: input error: " << e.what() << '\n';
    return kInput;
  } catch (const Error& e) {
    std::cerr << "hsnp: " << e.what() << '\n';
    return kViolation;
  }
  return kInput;
}
