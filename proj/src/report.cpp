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

#include "hsnp/report.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "hsnp/errors.hpp"

namespace hsnp {

std::string to_string(Route r) {
  switch (r) {
    case Route::kAuto:
      return "auto";
    case Route::kDirect:
      return "direct";
    case Route::kSplit:
      return "split";
  }
  return "?";
}

namespace {

Json rational_json(const Rational& x) {
  if (x.get_den() == 1 && x.get_num().fits_slong_p()) return x.get_num().get_si();
  return to_string(x);
}

Json poly_json(const LaurentPolynomial& P) {
  return Json{{"p", P.p}, {"a", P.a}, {"d1", P.d1}, {"d2", P.d2}, {"coeffs", P.coeffs}, {"text", P.str()}};
}

Json optional_bool(const std::optional<bool>& b) { return b ? Json(*b) : Json(nullptr); }

}  // namespace

Json polygon_to_json(const Polygon& P) {
  Json segs = Json::array();
  for (const auto& seg : P.segments()) {
    Json len = rational_json(seg.length);
    segs.push_back(Json::array({seg.slope.get_num().get_si(), seg.slope.get_den().get_si(), len}));
  }
  return Json{{"segments", segs}};
}

Json lpoly_to_json(const LPolynomial& L) {
  Json coeffs = Json::array();
  for (const auto& c : L.coeffs) coeffs.push_back(c.str());
  return Json{{"ring", L.ring_tag()}, {"degree", L.degree()}, {"coeffs", coeffs}, {"text", L.str()}};
}

Json hs_to_json(const HsReport& r) {
  return Json{{"d1", r.params.d1},
              {"d2", r.params.d2},
              {"s", r.params.s},
              {"nu", r.params.nu},
              {"hs", polygon_to_json(r.hs)},
              {"hp", polygon_to_json(r.hp)},
              {"checks",
               {{"length", r.length_ok},
                {"end_slopes", r.has_end_slopes},
                {"symmetric", r.symmetric},
                {"split_identity", r.split_identity},
                {"equals_hp", r.equals_hp},
                {"hp_iff_nu_one", r.hp_iff_nu_one}}},
              {"ok", r.ok()}};
}

Json newton_to_json(const NewtonReport& r) {
  return Json{{"polynomial", poly_json(r.P)},
              {"s", r.s},
              {"convention", to_string(r.convention)},
              {"route", to_string(r.route)},
              {"L", lpoly_to_json(r.L)},
              {"np", polygon_to_json(r.np)},
              {"hs", polygon_to_json(r.hs)},
              {"hp", polygon_to_json(r.hp)},
              {"np_above_hs", r.np_above_hs},
              {"hs_above_hp", r.hs_above_hp},
              {"equal", r.equal},
              {"predicate", r.predicate}};
}

Json stickelberger_to_json(const StickelbergerRecord& r) {
  Json j{{"p", r.p}, {"s", r.s}, {"status", r.status}};
  if (!r.reason.empty()) j["reason"] = r.reason;
  if (r.status == "ok") {
    j["np"] = polygon_to_json(r.np);
    j["expected"] = polygon_to_json(r.expected);
    j["np_ok"] = r.np_ok;
    j["gauss_checked"] = r.gauss_checked;
    j["gauss_passed"] = r.gauss_passed;
  }
  j["ok"] = r.ok();
  return j;
}

Json config_to_json(const SweepConfig& c) {
  Json degrees = Json::array();
  for (auto [d1, d2] : c.degrees) degrees.push_back(Json::array({d1, d2}));
  return Json{{"primes", c.primes},
              {"s_values", c.s_values},
              {"nu_filter", c.nu_filter},
              {"degrees", degrees},
              {"samples", c.samples},
              {"seed", c.seed},
              {"cap", c.cap},
              {"split_samples", c.split_samples},
              {"stickelberger", c.stickelberger}};
}

Json sweep_to_json(const SweepReport& r) {
  Json cells = Json::array();
  for (const auto& c : r.cells) {
    Json j{{"p", c.p}, {"s", c.s}, {"d1", c.d1}, {"d2", c.d2}, {"nu", c.nu},
           {"convention", to_string(c.convention)}, {"status", c.status}};
    if (!c.reason.empty()) j["reason"] = c.reason;
    if (c.status == "skipped" && c.hs.empty()) {
      cells.push_back(std::move(j));
      continue;
    }
    j["route"] = to_string(c.route);
    j["hs"] = polygon_to_json(c.hs);
    j["hp"] = polygon_to_json(c.hp);
    j["predicate"] = c.predicate;
    Json samples = Json::array();
    for (const auto& smp : c.samples) {
      Json sj{{"index", smp.index},  {"coeffs", smp.coeffs}, {"poly", smp.poly},
              {"np", polygon_to_json(smp.np)}, {"above", smp.above}, {"equal", smp.equal},
              {"gap", rational_json(smp.gap)}, {"split_ok", optional_bool(smp.split_ok)}};
      if (!smp.split_note.empty()) sj["split_note"] = smp.split_note;
      samples.push_back(std::move(sj));
    }
    j["samples"] = std::move(samples);
    j["above_count"] = c.above_count;
    j["equal_count"] = c.equal_count;
    j["equality_consistent"] = c.equality_consistent;
    j["split"] = {{"run", c.split_run}, {"passed", c.split_passed}, {"skipped", c.split_skipped}};
    cells.push_back(std::move(j));
  }
  Json st = Json::array();
  for (const auto& s : r.stickelberger) st.push_back(stickelberger_to_json(s));
  Json out{{"config", config_to_json(r.config)},
           {"cells", cells},
           {"stickelberger", st},
           {"summary",
            {{"cells", r.cells.size()},
             {"samples", r.total_samples},
             {"dominance_failures", r.dominance_failures},
             {"equality_mismatch_cells", r.equality_mismatch_cells},
             {"split_failures", r.split_failures},
             {"stickelberger_failures", r.stickelberger_failures},
             {"skipped_cells", r.skipped_cells},
             {"error_cells", r.error_cells},
             {"ok", r.ok()}}}};
  if (r.reproducer) {
    const auto& x = *r.reproducer;
    out["reproducer"] = {{"p", x.p},         {"s", x.s},           {"d1", x.d1}, {"d2", x.d2},
                         {"sample", x.sample}, {"coeffs", x.coeffs}, {"what", x.what}};
  } else {
    out["reproducer"] = nullptr;
  }
  return out;
}

Json converge_to_json(const ConvergeReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows)
    rows.push_back({{"p", row.p},
                    {"route", to_string(row.route)},
                    {"np", polygon_to_json(row.np)},
                    {"hs", polygon_to_json(row.hs)},
                    {"gap", rational_json(row.gap)},
                    {"scaled_gap", rational_json(row.scaled_gap)},
                    {"bound_ok", row.bound_ok}});
  Json coeffs = Json::array();
  for (const auto& c : r.P.coeffs) coeffs.push_back(to_string(c));
  return Json{{"polynomial", {{"d1", r.P.d1}, {"d2", r.P.d2}, {"coeffs", coeffs}}},
              {"s", r.s},
              {"nu", r.nu},
              {"bound", rational_json(r.bound)},
              {"rows", rows},
              {"nonincreasing", r.nonincreasing},
              {"final_smaller", r.final_smaller},
              {"bound_ok", r.bound_ok},
              {"ok", r.ok()}};
}

Json split_to_json(const SplitReport& r) {
  Json factors = Json::array();
  for (const auto& f : r.check.factors)
    factors.push_back({{"representative", f.representative}, {"length", f.length}, {"L", lpoly_to_json(f.factor)}});
  return Json{{"polynomial", poly_json(r.P)},
              {"s", r.s},
              {"convention", to_string(r.convention)},
              {"direct", lpoly_to_json(r.check.direct)},
              {"product", lpoly_to_json(r.check.product)},
              {"factors", factors},
              {"polynomial_identity", r.check.polynomial_identity},
              {"sum_identity", r.check.sum_identity},
              {"ok", r.check.ok()}};
}

Json curve_to_json(const CurveReport& r, const ASCurve& curve) {
  Json counts = Json::array();
  for (const auto& c : r.counts) counts.push_back(to_string(c));
  return Json{{"polynomial", poly_json(curve.P)},
              {"s", curve.s},
              {"genus", r.genus},
              {"point_counts", counts},
              {"numerator", lpoly_to_json(r.numerator)},
              {"methods_agree", r.methods_agree},
              {"np", polygon_to_json(r.newton)},
              {"np_scaled", polygon_to_json(r.scaled)},
              {"hs", polygon_to_json(r.hs)},
              {"above", r.above},
              {"equal", r.equal},
              {"predicate", r.predicate},
              {"ok", r.ok()}};
}

Json selftest_to_json(const std::vector<SelftestLine>& lines) {
  Json arr = Json::array();
  bool all = true;
  for (const auto& l : lines) {
    arr.push_back({{"name", l.name}, {"pass", l.pass}, {"detail", l.detail}});
    all = all && l.pass;
  }
  return Json{{"checks", arr}, {"ok", all}};
}

// ------------------------------------------------------------ config

SweepConfig config_from_json(const Json& j, SweepConfig c) {
  if (!j.is_object()) throw InputError("config must be a JSON object");
  try {
    for (const auto& [key, v] : j.items()) {
      if (key == "primes") c.primes = v.get<std::vector<unsigned long>>();
      else if (key == "s_values") c.s_values = v.get<std::vector<long>>();
      else if (key == "nu_filter") c.nu_filter = v.get<std::vector<long>>();
      else if (key == "degrees") {
        c.degrees.clear();
        for (const auto& d : v) {
          auto pair = d.get<std::vector<long>>();
          if (pair.size() != 2) throw InputError("degrees entries must be [d1, d2]");
          c.degrees.emplace_back(pair[0], pair[1]);
        }
      } else if (key == "samples") c.samples = v.get<unsigned>();
      else if (key == "seed") c.seed = v.get<std::uint64_t>();
      else if (key == "cap") c.cap = v.get<std::uint64_t>();
      else if (key == "split_samples") c.split_samples = v.get<unsigned>();
      else if (key == "stickelberger") c.stickelberger = v.get<bool>();
      else if (key == "jobs") c.jobs = v.get<unsigned>();
      else if (key == "json") c.json_path = v.get<std::string>();
      else if (key == "svg") c.svg_path = v.get<std::string>();
      else throw InputError("unknown config key '" + key + "'");
    }
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("bad config: ") + e.what());
  }
  return c;
}

SweepConfig load_config(const std::string& path, SweepConfig base) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(path + ": " + e.what());
  }
  return config_from_json(j, std::move(base));
}

// ------------------------------------------------------------ plots

namespace {

struct Box {
  double xmax = 1;
  double ymax = 1;
};

Box bounds(const std::vector<LabeledPolygon>& polys) {
  Box b;
  for (const auto& [name, P] : polys) {
    b.xmax = std::max(b.xmax, P.length().get_d());
    b.ymax = std::max(b.ymax, P.height().get_d());
  }
  return b;
}

}  // namespace

std::string ascii_plot(const std::vector<LabeledPolygon>& polys, int width, int height) {
  static const char glyphs[] = "*o+#x%@";
  Box b = bounds(polys);
  std::vector<std::string> grid(static_cast<std::size_t>(height), std::string(static_cast<std::size_t>(width), ' '));
  // Earlier entries are drawn last so they stay visible.
  for (std::size_t k = polys.size(); k-- > 0;) {
    const Polygon& P = polys[k].second;
    const double len = P.length().get_d();
    for (int col = 0; col < width; ++col) {
      double x = b.xmax * col / (width - 1);
      if (x > len + 1e-9) continue;
      Rational xr(x);
      if (xr > P.length()) xr = P.length();
      double y = P.height_at(xr).get_d();
      int row = static_cast<int>(std::lround(y / b.ymax * (height - 1)));
      grid[static_cast<std::size_t>(height - 1 - row)][static_cast<std::size_t>(col)] = glyphs[k % 7];
    }
  }
  std::ostringstream out;
  for (const auto& line : grid) out << '|' << line << '\n';
  out << '+' << std::string(static_cast<std::size_t>(width), '-') << '\n';
  for (std::size_t k = 0; k < polys.size(); ++k) out << "  " << glyphs[k % 7] << ' ' << polys[k].first << '\n';
  return out.str();
}

std::string svg_plot(const std::string& title, const std::vector<LabeledPolygon>& polys) {
  static const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};
  const double W = 480, H = 360, m = 40;
  Box b = bounds(polys);
  auto sx = [&](double x) { return m + x / b.xmax * (W - 2 * m); };
  auto sy = [&](double y) { return H - m - y / b.ymax * (H - 2 * m); };
  std::ostringstream out;
  out.setf(std::ios::fixed);
  out.precision(2);
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<text x=\"" << m << "\" y=\"20\" font-family=\"monospace\" font-size=\"13\">" << title << "</text>\n";
  out << "<line x1=\"" << m << "\" y1=\"" << H - m << "\" x2=\"" << W - m << "\" y2=\"" << H - m
      << "\" stroke=\"black\"/>\n";
  out << "<line x1=\"" << m << "\" y1=\"" << H - m << "\" x2=\"" << m << "\" y2=\"" << m
      << "\" stroke=\"black\"/>\n";
  for (std::size_t k = 0; k < polys.size(); ++k) {
    const char* color = colors[k % 6];
    out << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"2\" points=\"";
    for (const auto& v : polys[k].second.vertices()) out << sx(v.x.get_d()) << ',' << sy(v.y.get_d()) << ' ';
    out << "\"/>\n";
    out << "<text x=\"" << W - 150 << "\" y=\"" << m + 16.0 * static_cast<double>(k) << "\" fill=\"" << color
        << "\" font-family=\"monospace\" font-size=\"12\">" << polys[k].first << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << content;
  if (!out) throw InputError("write failed for " + path);
}

}  // namespace hsnp
