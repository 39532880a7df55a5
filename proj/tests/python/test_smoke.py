# Copyright 2026 The hspsim Authors
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

from fractions import Fraction

import pytest

hspsim = pytest.importorskip("hspsim")


def test_extraction_law_quarters():
    law = hspsim.wht_distribution("110", "101")
    assert set(law) == {"110", "101", "100", "111"}
    assert all(p == Fraction(1, 4) for p in law.values())


def test_success_probability_exact():
    assert hspsim.success_probability(7) == Fraction(3969, 4096)
    assert hspsim.success_probability(2) == Fraction(1, 4)
    assert hspsim.success_probability(6) < Fraction(95, 100)


def test_t_recovery():
    assert hspsim.default_k(10) == 8
    assert hspsim.t_recovery_probability(10) == Fraction(1013, 1024)
    assert hspsim.t_recovery_probability(3) == 1
    # thousand-bit case stays exact
    p = hspsim.t_recovery_probability(1000)
    assert round(float(p), 4) == 0.9769


def test_lower_bounds():
    b = hspsim.lower_bounds(8)
    assert b == {"instances": 1792, "c_i": 4, "c_s": 11}
    big = hspsim.lower_bounds(256)
    assert big["c_i"] == 34 and big["c_s"] == 269
    assert big["instances"] == 256 * 255 * 2**253


def test_instances():
    assert len(hspsim.enumerate_instances(3)) == 6
    assert len(hspsim.enumerate_instances(4)) == 24
    s, sp = hspsim.random_instance(12, seed=5)
    assert s.count("1") == sp.count("1")
    assert sum(a != b for a, b in zip(s, sp)) == 2
    assert hspsim.random_instance(12, seed=5) == (s, sp)


def test_grover_plan():
    plan = hspsim.grover_plan(4, 2)
    assert plan["iterations"] == 1
    assert abs(plan["success_probability"] - 0.5) < 1e-12


def test_identify_once_deterministic():
    a = hspsim.identify_once("maxip", "110", "101", seed=3)
    b = hspsim.identify_once("maxip", "110", "101", seed=3)
    assert a == b
    assert a["ledger"]["superposed"] == 7
    if a["output"] is not None:
        assert set(a["output"]) == {"110", "101"}

    c = hspsim.identify_once("classical-subset", "110", "101", seed=0)
    assert c["success"]
    assert c["ledger"]["total"] >= 3


def test_run_trials_summary():
    out = hspsim.run_trials("maxip", n=8, trials=2000, seed=99)
    assert out["trials"] == 2000
    assert out["exact_success"] == Fraction(3969, 4096)
    assert abs(out["rate"] - float(Fraction(3969, 4096))) < 0.02
    assert out["mean_queries"] == 7.0


def test_matroid_bases():
    out = hspsim.identify_matroid_bases(3, [1, 2], [1, 3], kind="rank", seed=1)
    assert out["total_queries"] == 7
    if out["bases"] is not None and out["success"]:
        assert sorted(map(sorted, out["bases"])) == [[1, 2], [1, 3]]
