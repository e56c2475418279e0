import os
from fractions import Fraction
from pathlib import Path

import pytest

import qcnpy

CONFIGS = Path(os.environ.get("QCN_CONFIG_DIR", Path(__file__).resolve().parents[2] / "configs"))


def cfg(name):
    return str(CONFIGS / name)


def test_multicast_example_region():
    a = qcnpy.Analysis.from_file(cfg("ex1.qcn"))
    assert a.num_vertices == 3
    assert a.labels == ["v_1_1_1", "v_1_1_2", "v_1_1_3"]
    r = a.region()
    assert r.dim == 2
    assert r.flows == ["r_1_1", "r_1_2"]
    assert r.volume == 1
    assert r.num_stable_sets == 3
    assert r.incidence(1, 1) == [1, 0, 1]
    assert r.contains([1, 1])
    assert not r.contains(["1.01", 0])


def test_coded_example_volume():
    r = qcnpy.Analysis.from_file(cfg("ex5.qcn"), coded=True).region()
    assert r.volume == 2
    assert r.num_stable_sets == 8


def test_pattern_override():
    r = qcnpy.Analysis.from_file(cfg("ex1.qcn"), pattern="single_unicast").region()
    assert r.volume == Fraction(1, 2)
    assert not r.contains([1, 1])


def test_decompose_and_schedule():
    r = qcnpy.Analysis.from_file(cfg("ex2.qcn")).region()
    d = r.decompose([Fraction(1, 2), Fraction(1, 2)])
    assert d["phi"] == [Fraction(1, 2), Fraction(1, 2)]
    assert d["margin"] == 0
    s = r.schedule(["1/2", "1/2"])
    assert s == {"frame": 2, "slots": [0, 1]}
    with pytest.raises(ValueError):
        r.decompose([1, 1])


def test_classify_claw():
    rep = qcnpy.Analysis.from_file(cfg("claw.qcn")).classify()
    assert rep["claw_free"] is False
    assert len(rep["claw"]) == 4


def test_simulate_verdicts():
    a = qcnpy.Analysis.from_file(cfg("ex1.qcn"))
    ok = a.simulate(["0.9", "0.9"], policy="frame", horizon=20000, seed=3)
    assert ok["stable"]
    bad = qcnpy.Analysis.from_file(cfg("ex2.qcn")).simulate(["0.55", "0.55"], horizon=20000)
    assert not bad["stable"]


def test_compare_table():
    t = qcnpy.compare(cfg("ex6.qcn"))
    assert [row["pattern"] for row in t["rows"]][:2] == ["single_unicast", "multiple_unicast"]
    assert t["rows"][0]["uncoded"] == Fraction(1, 24)
    assert t["rows"][6]["coded"] == Fraction(8, 3)
    assert round(float(t["average"]), 1) == 54.8


def test_errors_surface_as_value_error():
    with pytest.raises(qcnpy.QcnError):
        qcnpy.Analysis.from_text("[system]\nusers = 1\n")
    with pytest.raises(ValueError):
        qcnpy.Analysis.from_file(cfg("does_not_exist.qcn"))
