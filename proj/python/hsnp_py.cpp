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


// Python bindings. Reports cross the boundary as JSON text.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "hsnp/errors.hpp"
#include "hsnp/report.hpp"
#include "hsnp/residue_cycles.hpp"
#include "hsnp/verify.hpp"

namespace py = pybind11;
using namespace hsnp;

namespace {

std::vector<std::pair<std::string, std::string>> segments(const Polygon& P) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& s : P.segments()) out.emplace_back(to_string(s.slope), to_string(s.length));
  return out;
}

LaurentPolynomial make_poly(unsigned long p, unsigned a, long d1, long d2, std::vector<std::uint64_t> coeffs) {
  return LaurentPolynomial::make(p, a, d1, d2, std::move(coeffs));
}

}  // namespace

PYBIND11_MODULE(_hsnp, m) {
  m.doc() = "Hodge-Stickelberger polygons and Newton polygons of exponential sums";

  // Later registrations are tried first.
  py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<SizeCapError>(m, "SizeCapError", PyExc_MemoryError);

  m.def(
      "hs_polygon", [](long d1, long d2, long s, long nu) { return segments(hs_polygon({d1, d2, s, nu})); },
      py::arg("d1"), py::arg("d2"), py::arg("s"), py::arg("nu"));
  m.def(
      "hodge_polygon", [](long D1, long D2) { return segments(hodge_polygon(D1, D2)); }, py::arg("D1"),
      py::arg("D2"));
  m.def(
      "coincidence_predicate",
      [](unsigned long p, long d1, long d2, long s, long nu) { return coincidence_predicate(p, {d1, d2, s, nu}); },
      py::arg("p"), py::arg("d1"), py::arg("d2"), py::arg("s"), py::arg("nu"));
  m.def(
      "cycles",
      [](long s, long nu) {
        std::vector<std::pair<std::vector<long>, std::string>> out;
        auto dec = cycle_decomposition(s, nu);
        for (const auto& c : dec.cycles()) out.emplace_back(c.elements, to_string(c.lambda));
        return out;
      },
      py::arg("s"), py::arg("nu"));

  m.def(
      "hs_report_json", [](long d1, long d2, long s, long nu) { return hs_to_json(hs_report({d1, d2, s, nu})).dump(); },
      py::arg("d1"), py::arg("d2"), py::arg("s"), py::arg("nu"));
  m.def(
      "newton_json",
      [](unsigned long p, unsigned a, long d1, long d2, std::vector<std::uint64_t> coeffs, long s,
         const std::string& convention, std::uint64_t cap) {
        LOptions opt;
        opt.cap = cap;
        Convention c = convention.empty() ? default_convention(d2) : parse_convention(convention);
        py::gil_scoped_release release;
        return newton_to_json(newton_report(make_poly(p, a, d1, d2, std::move(coeffs)), s, c, opt)).dump();
      },
      py::arg("p"), py::arg("a"), py::arg("d1"), py::arg("d2"), py::arg("coeffs"), py::arg("s"),
      py::arg("convention") = "", py::arg("cap") = kDefaultCap);
  m.def(
      "split_json",
      [](unsigned long p, unsigned a, long d1, long d2, std::vector<std::uint64_t> coeffs, long s,
         const std::string& convention, std::uint64_t cap) {
        LOptions opt;
        opt.cap = cap;
        Convention c = convention.empty() ? default_convention(d2) : parse_convention(convention);
        py::gil_scoped_release release;
        return split_to_json(split_report(make_poly(p, a, d1, d2, std::move(coeffs)), s, c, opt)).dump();
      },
      py::arg("p"), py::arg("a"), py::arg("d1"), py::arg("d2"), py::arg("coeffs"), py::arg("s"),
      py::arg("convention") = "", py::arg("cap") = kDefaultCap);
  m.def(
      "curve_json",
      [](unsigned long p, long d1, long d2, std::vector<std::uint64_t> coeffs, long s, std::uint64_t cap) {
        LOptions opt;
        opt.cap = cap;
        ASCurve curve{make_poly(p, 1, d1, d2, std::move(coeffs)), s};
        py::gil_scoped_release release;
        return curve_to_json(curve_check(curve, opt), curve).dump();
      },
      py::arg("p"), py::arg("d1"), py::arg("d2"), py::arg("coeffs"), py::arg("s"), py::arg("cap") = kDefaultCap);
  m.def(
      "stickelberger_json",
      [](unsigned long p, long s, std::uint64_t cap) {
        py::gil_scoped_release release;
        return stickelberger_to_json(stickelberger_check(p, s, cap)).dump();
      },
      py::arg("p"), py::arg("s"), py::arg("cap") = kDefaultCap);
  m.def(
      "converge_json",
      [](std::vector<std::string> coeffs, long d1, long d2, long s, long nu, std::vector<unsigned long> primes,
         std::uint64_t cap) {
        RationalLaurent P;
        P.d1 = d1;
        P.d2 = d2;
        for (const auto& c : coeffs) P.coeffs.push_back(parse_rational(c));
        if (static_cast<long>(P.coeffs.size()) != d1 + d2 + 1) throw InputError("expected d1 + d2 + 1 coefficients");
        LOptions opt;
        opt.cap = cap;
        py::gil_scoped_release release;
        return converge_to_json(converge(P, s, nu, primes, opt)).dump();
      },
      py::arg("coeffs"), py::arg("d1"), py::arg("d2"), py::arg("s"), py::arg("nu"), py::arg("primes"),
      py::arg("cap") = kDefaultCap);
  m.def(
      "sweep_json",
      [](const std::string& config) {
        SweepConfig cfg = config.empty() ? SweepConfig{} : config_from_json(Json::parse(config));
        py::gil_scoped_release release;
        return sweep_to_json(sweep(cfg)).dump(2);
      },
      py::arg("config") = "");
  m.def("selftest_json", []() {
    py::gil_scoped_release release;
    return selftest_to_json(selftest()).dump();
  });
}
