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

// JSON serialization of reports and text / SVG plots of polygons.

#ifndef HSNP_REPORT_HPP
#define HSNP_REPORT_HPP

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "hsnp/verify.hpp"

namespace hsnp {

using Json = nlohmann::ordered_json;

std::string to_string(Route r);

/// {"segments": [[num, den, length], ...]}; length is an integer or "n/d".
Json polygon_to_json(const Polygon& P);
Json lpoly_to_json(const LPolynomial& L);

Json hs_to_json(const HsReport& r);
Json newton_to_json(const NewtonReport& r);
Json sweep_to_json(const SweepReport& r);
Json converge_to_json(const ConvergeReport& r);
Json split_to_json(const SplitReport& r);
Json curve_to_json(const CurveReport& r, const ASCurve& curve);
Json stickelberger_to_json(const StickelbergerRecord& r);
Json selftest_to_json(const std::vector<SelftestLine>& lines);

/// Overrides fields of base with those present in j; unknown keys are input errors.
SweepConfig config_from_json(const Json& j, SweepConfig base = {});
Json config_to_json(const SweepConfig& c);
SweepConfig load_config(const std::string& path, SweepConfig base = {});

using LabeledPolygon = std::pair<std::string, Polygon>;

/// Character plot, one glyph per polygon.
std::string ascii_plot(const std::vector<LabeledPolygon>& polys, int width = 60, int height = 16);
std::string svg_plot(const std::string& title, const std::vector<LabeledPolygon>& polys);

void write_file(const std::string& path, const std::string& content);

}  // namespace hsnp

#endif  // HSNP_REPORT_HPP
