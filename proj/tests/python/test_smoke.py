"""Smoke tests for the pyucq bindings."""

from fractions import Fraction

import pytest

import pyucq


UPPER = ("upper01", ["0", "1"], [["0", "1"], ["0", "0"]])


def frac(s):
    return Fraction(s)


def test_make_space_validates():
    s = pyucq.make_space(*UPPER)
    assert len(s) == 2
    assert s.distance("0", "1") == "1"
    assert s.distance("1", "0") == "0"
    with pytest.raises(ValueError):
        pyucq.make_space("bad", ["a", "b"], [["0", "0"], ["0", "0"]])


def test_json_round_trip():
    s = pyucq.make_space(*UPPER)
    back = pyucq.space_from_json(s.to_json())
    assert back.points == s.points
    assert back.distance("0", "1") == s.distance("0", "1")


def test_t1_conjugate_sup_metric():
    s = pyucq.make_space(*UPPER)
    assert not pyucq.is_t1(s)
    c = pyucq.conjugate(s)
    assert c.distance("0", "1") == "0"
    m = pyucq.sup_metric(s)
    assert m.distance("0", "1") == m.distance("1", "0") == "1"


def test_topology_helpers():
    s = pyucq.make_space(*UPPER)
    assert pyucq.isolated_points(s) == ["0"]
    assert pyucq.is_normal(s)
    assert pyucq.isolation(s, "0") == "1"

    entangled = pyucq.make_space(
        "entangled3",
        ["c", "d", "z"],
        [["0", "1", "0"], ["1", "0", "0"], ["1", "1", "0"]],
    )
    assert not pyucq.is_normal(entangled)
    assert pyucq.lebesgue_number(entangled, [["c", "z"], ["d", "z"]]) == "1"


def test_rho_construction():
    discrete = pyucq.make_space("d2", ["a", "b"], [["0", "1"], ["1", "0"]])
    space, used_discrete, warnings = pyucq.rho(discrete)
    assert used_discrete
    assert not warnings
    assert space.distance("a", "b") == "1"


def test_zoo_catalog():
    ids = pyucq.zoo_ids()
    assert len(ids) == 10
    assert "sorgenfrey" in ids
    assert "quasi" in pyucq.zoo_describe("upper").lower() or pyucq.zoo_describe("upper")

    trunc = pyucq.zoo_emit("sorgenfrey", 5)
    assert len(trunc) == 5
    assert not pyucq.validate(trunc)

    runs = pyucq.zoo_check("one-vs-recip", horizon=2000)
    assert runs
    assert all(r["matches"] and not r["skipped"] for r in runs)


def test_exact_distances_are_fraction_friendly():
    trunc = pyucq.zoo_emit("sum-through-zero", 6)
    pts = trunc.points
    for x in pts:
        for y in pts:
            d = frac(trunc.distance(x, y))
            assert d >= 0
            if x == y:
                assert d == 0


def test_finite_suite_runs_clean():
    failures, report = pyucq.run_finite_suite(seed=3, trials=25, max_size=6)
    assert failures == 0
    assert '"suite"' in report
