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


#include "doctest.h"
#include "hsnp/errors.hpp"
#include "hsnp/report.hpp"
#include "hsnp/verify.hpp"

using namespace hsnp;

namespace {

Rational q(long n, long d = 1) { return make_rational(n, d); }

SweepConfig small() {
  SweepConfig c;
  c.primes = {3, 7};
  c.s_values = {1, 3};
  c.degrees = {{1, 0}, {1, 1}};
  c.samples = 2;
  c.split_samples = 1;
  return c;
}

}  // namespace

TEST_CASE("hs report") {
  auto r = hs_report({1, 1, 3, 2});
  CHECK(r.ok());
  CHECK_FALSE(r.equals_hp);
  CHECK(hs_report({1, 1, 3, 1}).equals_hp);
}

TEST_CASE("newton reports") {
  auto K = LaurentPolynomial::make(3, 1, 1, 1, {1, 0, 1});
  auto r = newton_report(K, 2, Convention::kTorus);
  CHECK(r.np == r.hs);
  CHECK(r.hs == r.hp);
  CHECK(r.predicate);
  auto r5 = newton_report(LaurentPolynomial::make(5, 1, 1, 1, {1, 0, 1}), 3, Convention::kTorus);
  CHECK(r5.np_above_hs);
  CHECK(r5.hs_above_hp);
  CHECK_FALSE(r5.hs == r5.hp);
  auto rx = newton_report(LaurentPolynomial::make(3, 1, 1, 0, {0, 1}), 2, Convention::kAffine);
  CHECK(rx.np == Polygon::from_segments({{q(1, 2), q(1)}}));
}

TEST_CASE("max abs gap") {
  auto a = Polygon::from_segments({{q(0), q(1)}, {q(1), q(1)}});
  auto b = Polygon::from_segments({{q(1, 2), q(2)}});
  CHECK(max_abs_gap(a, b) == q(1, 2));
  CHECK(max_abs_gap(b, a) == q(1, 2));
  CHECK(max_abs_gap(a, a) == 0);
}

TEST_CASE("sweep is deterministic") {
  auto a = sweep_to_json(sweep(small())).dump(2);
  auto cfg = small();
  cfg.jobs = 3;
  auto b = sweep_to_json(sweep(cfg)).dump(2);
  CHECK(a == b);
  auto cfg2 = small();
  cfg2.seed = 99;
  CHECK(sweep_to_json(sweep(cfg2)).dump(2) != a);
}

TEST_CASE("sweep cells") {
  auto c = run_cell(small(), 3, 3, 1, 0);
  CHECK(c.status == "skipped");
  auto ok = run_cell(small(), 7, 3, 1, 1);
  CHECK(ok.status == "ok");
  CHECK(ok.predicate);
  CHECK(ok.equal_count == 2);
  CHECK(ok.split_run == 1);
  CHECK(ok.split_passed == 1);
}

TEST_CASE("stickelberger records") {
  for (long s = 1; s <= 6; ++s) CHECK(stickelberger_check(5, s).ok());
  CHECK(stickelberger_check(3, 3).status == "skipped");
}

TEST_CASE("config json") {
  Json j = Json::parse(R"({"primes": [5], "samples": 4, "degrees": [[2, 1]]})");
  auto c = config_from_json(j);
  CHECK(c.primes == std::vector<unsigned long>{5});
  CHECK(c.samples == 4);
  CHECK(c.degrees.size() == 1);
  CHECK(c.s_values.size() == 4);
  CHECK_THROWS_AS(config_from_json(Json::parse(R"({"bogus": 1})")), InputError);
  CHECK_THROWS_AS(config_from_json(Json::parse(R"({"samples": "x"})")), InputError);
  auto back = config_from_json(config_to_json(c));
  CHECK(config_to_json(back) == config_to_json(c));
}

TEST_CASE("polygon json") {
  auto j = polygon_to_json(Polygon::from_segments({{q(0), q(1)}, {q(1, 2), q(4)}, {q(1), q(1)}}));
  CHECK(j.dump() == R"({"segments":[[0,1,1],[1,2,4],[1,1,1]]})");
}

TEST_CASE("converge rejects bad primes") {
  RationalLaurent P{1, 1, {q(1), q(0), q(1)}};
  CHECK_THROWS_AS(converge(P, 3, 2, {7}), InputError);
  auto r = converge(P, 3, 2, {5, 11});
  CHECK(r.rows.size() == 2);
  CHECK(r.rows[0].gap == 0);
  CHECK(r.rows[1].gap == q(1, 5));
}

TEST_CASE("selftest") {
  for (const auto& line : selftest()) CHECK_MESSAGE(line.pass, line.name << ": " << line.detail);
}

TEST_CASE("plots") {
  auto hs = hs_polygon({1, 1, 3, 2});
  auto txt = ascii_plot({{"HS", hs}});
  CHECK(txt.find("* HS") != std::string::npos);
  auto svg = svg_plot("t", {{"HS", hs}});
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.find("polyline") != std::string::npos);
}
