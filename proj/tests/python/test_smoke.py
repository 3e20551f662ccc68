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


from fractions import Fraction

import pytest

import hsnp


def test_hs_polygon_example():
    assert hsnp.hs_polygon(1, 1, 3, 2) == [
        (Fraction(0), Fraction(1)),
        (Fraction(1, 2), Fraction(4)),
        (Fraction(1), Fraction(1)),
    ]
    assert hsnp.hs_polygon(1, 1, 3, 1) == hsnp.hodge_polygon(3, 3)


def test_cycles():
    assert hsnp.cycles(5, 3) == [([0], Fraction(0)), ([1, 3, 4, 2], Fraction(1, 2))]


def test_newton_matches_hs_at_p3():
    r = hsnp.newton(3, [1, 0, 1], d1=1, d2=1, s=2)
    assert r["np"] == r["hs"] == r["hp"]
    assert r["L"]["degree"] == 4


def test_affine_line():
    r = hsnp.newton(3, [0, 1], d1=1, d2=0, s=2, convention="affine")
    assert r["np"]["segments"] == [[1, 2, 1]]


def test_split_and_curve():
    assert hsnp.split(5, [0, 1], d1=1, d2=0, s=4)["ok"]
    c = hsnp.curve(3, [1, 0, 1], d1=1, d2=1)
    assert c["ok"] and c["genus"] == 2


def test_stickelberger():
    assert hsnp.stickelberger(13, 8)["ok"]


def test_converge_table():
    r = hsnp.converge([1, 0, 1], 1, 1, 3, 2, [5, 11])
    assert [row["gap"] for row in r["rows"]] == [0, "1/5"]


def test_sweep_deterministic():
    cfg = {"primes": [3, 5], "s_values": [1, 2], "degrees": [[1, 0], [1, 1]], "samples": 2}
    assert hsnp.sweep(cfg) == hsnp.sweep(cfg)


def test_errors():
    with pytest.raises(ValueError):
        hsnp.hs_polygon(1, 1, 4, 2)
    with pytest.raises(MemoryError):
        hsnp.newton(13, [1, 3, 0, 1], d1=2, d2=1, s=12, cap=1000)


def test_selftest():
    assert hsnp.selftest()["ok"]
