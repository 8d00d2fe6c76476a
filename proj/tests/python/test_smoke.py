# Copyright 2026 The qpk Authors
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

import json
import pathlib

import pytest

import qpk

SCENARIOS = pathlib.Path(__file__).resolve().parents[2] / "scenarios"


def test_scalar_round_trip():
    z = qpk.ComplexRational("2/3-1/5i")
    assert str(z) == "2/3-1/5i"
    assert z.re == "2/3" and z.im == "-1/5"
    assert str(z * z.conjugate()) == "109/225"
    with pytest.raises(qpk.ParseError):
        qpk.ComplexRational("1/0")


def test_penrose_knowledge():
    family = qpk.total_orders(3)
    assert family.names == ["123", "231", "312", "132", "213", "321"]
    phi = qpk.StateVector(family, ["2", "2", "2", "-1", "-1", "-1"])
    psi = qpk.uniform_psi(family)
    assert str(qpk.inner(phi, psi)) == "3"
    k = qpk.extract_knowledge(phi, psi)
    assert set(k["affirmed"]) == {"P_12", "P_23", "P_31"}
    assert set(k["denied"]) == {"P_21", "P_32", "P_13"}
    assert qpk.check_consistency(phi, psi)["paradoxical"]


def test_pigeonhole_product_states():
    family = qpk.lr_strings(3)
    psi = qpk.product_state(family, [("1", "1")] * 3)
    phi = qpk.product_state(family, [("1", "i")] * 3)
    assert str(qpk.inner(phi, psi)) == "-2-2i"
    for test in family.tests:
        assert qpk.classify(phi, psi, test)["verdict"] == "denied"


def test_non_overlapping_raises():
    family = qpk.togetherness3()
    phi = qpk.StateVector(family, ["1", "-1", "0", "0"])
    with pytest.raises(qpk.NonOverlappingError):
        qpk.classify(phi, qpk.uniform_psi(family), "P_12")


def test_search_and_experiments():
    hits = qpk.find_paradoxes(qpk.togetherness3(), c=1)
    assert any(h["phi"] == ["-1", "1", "1", "1"] for h in hits)
    report = qpk.min_family_experiment(2, c=2)
    assert report["paradoxes"] == 0
    with pytest.raises(qpk.SizeError):
        qpk.find_paradoxes(qpk.total_orders(4), c=2)


def test_scenarios_and_builtins():
    report = qpk.analyze_scenario((SCENARIOS / "penrose.json").read_text())
    assert report["verdict"]["kind"] == "paradoxical"
    chroma = qpk.chroma_scenario((SCENARIOS / "star6_clique.json").read_text())
    assert chroma["chromatic_number"] == 5
    assert len(qpk.builtin_names()) == 9
    for name in qpk.builtin_names():
        passed, mismatches = qpk.verify(name)
        assert passed, mismatches
    with pytest.raises(qpk.SchemaError):
        qpk.analyze_scenario(json.dumps({"version": "qpk/1"}))
