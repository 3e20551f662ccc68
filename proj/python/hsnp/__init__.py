# Copyright 2026 The hsnp Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.


"""Hodge-Stickelberger polygons and Newton polygons of exponential sums."""

import json
from fractions import Fraction

from . import _hsnp
from ._hsnp import Error, InputError, SizeCapError, coincidence_predicate

__all__ = [
    "Error",
    "InputError",
    "SizeCapError",
    "coincidence_predicate",
    "converge",
    "curve",
    "cycles",
    "hodge_polygon",
    "hs_polygon",
    "hs_report",
    "newton",
    "selftest",
    "split",
    "stickelberger",
    "sweep",
]


def _polygon(segs):
    return [(Fraction(slope), Fraction(length)) for slope, length in segs]


def hs_polygon(d1, d2, s, nu):
    """Segments (slope, length) of HS(A_{d1,d2}, nu, s)."""
    return _polygon(_hsnp.hs_polygon(d1, d2, s, nu))


def hodge_polygon(D1, D2):
    return _polygon(_hsnp.hodge_polygon(D1, D2))


def cycles(s, nu):
    """Cycles of multiplication by nu mod s with their lambda invariants."""
    return [(elems, Fraction(lam)) for elems, lam in _hsnp.cycles(s, nu)]


def hs_report(d1, d2, s, nu):
    return json.loads(_hsnp.hs_report_json(d1, d2, s, nu))


def newton(p, coeffs, d1, d2, s=1, a=1, convention="", cap=1 << 24):
    """Newton polygon of L(P(x^s)) against HS and HP. coeffs are a_{-d2}..a_{d1}."""
    return json.loads(_hsnp.newton_json(p, a, d1, d2, list(coeffs), s, convention, cap))


def split(p, coeffs, d1, d2, s, a=1, convention="", cap=1 << 24):
    return json.loads(_hsnp.split_json(p, a, d1, d2, list(coeffs), s, convention, cap))


def curve(p, coeffs, d1, d2, s=1, cap=1 << 24):
    return json.loads(_hsnp.curve_json(p, d1, d2, list(coeffs), s, cap))


def stickelberger(p, s, cap=1 << 24):
    return json.loads(_hsnp.stickelberger_json(p, s, cap))


def converge(coeffs, d1, d2, s, nu, primes, cap=1 << 24):
    return json.loads(_hsnp.converge_json([str(c) for c in coeffs], d1, d2, s, nu, list(primes), cap))


def sweep(config=None):
    """Runs a sweep; config mirrors the JSON config file."""
    return json.loads(_hsnp.sweep_json(json.dumps(config) if config else ""))


def selftest():
    return json.loads(_hsnp.selftest_json())
