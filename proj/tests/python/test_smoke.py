"""Smoke tests for the python bindings.

Run against an installed wheel, or against a build tree with the extension
directory on PYTHONPATH (the ctest entry does the latter).
"""

import json

import pytest

liefam = pytest.importorskip("_liefam")


def load(text):
    return json.loads(text)


def test_catalog_and_validate():
    so21 = liefam.catalog("so:2,1")
    ok, report = liefam.validate(so21)
    assert ok
    assert load(report)["ok"] is True
    assert load(so21)["dim"] == 3

    with pytest.raises(ValueError):
        liefam.catalog("sp:4")


def test_validate_rejects_bad_table():
    bad = {
        "schema": "lie-algebra/v1",
        "dim": 2,
        "field": "real",
        "basis": ["x", "y"],
        "sc": [
            {"i": 1, "j": 2, "k": 1, "c": "1"},
            {"i": 2, "j": 1, "k": 1, "c": "1"},
        ],
    }
    ok, report = liefam.validate(json.dumps(bad))
    assert not ok
    assert load(report)["issues"]


def test_contraction_of_so3_is_iso2():
    so3 = liefam.catalog("so:3,0")
    contracted = liefam.contract(so3, [1])  # k = span(L1_2)
    assert liefam.fingerprint_equal(contracted, liefam.catalog("iso:2"))


def test_gcontract_limit_failure():
    so3 = liefam.catalog("so:3,0")
    same = liefam.gcontract(so3, [0, 0, 0])
    assert liefam.structurally_equal(same, so3)
    with pytest.raises(Exception, match="no limit"):
        liefam.gcontract(so3, [0, 0, 1])


def test_dual_of_compact_pair_is_noncompact():
    dual = liefam.dualize_so(2, 1, 0)
    assert liefam.fingerprint_equal(dual, liefam.catalog("so:2,1"))
    assert not liefam.fingerprint_equal(dual, liefam.catalog("so:3,0"))


def test_family_fibers_hit_the_trichotomy():
    fam = liefam.family_so(2, 1, 0)
    assert load(fam)["schema"] == "family/v1"
    assert liefam.fingerprint_equal(liefam.fiber(fam, "1"), liefam.catalog("so:3,0"))
    assert liefam.fingerprint_equal(liefam.fiber(fam, "-1"), liefam.catalog("so:2,1"))
    assert liefam.fingerprint_equal(liefam.fiber(fam, "0"), liefam.catalog("iso:2"))
    # Exact rationals survive the string boundary.
    quarter = load(liefam.fiber(fam, "1/4"))
    assert any(entry["c"] in ("1/4", "-1/4") for entry in quarter["sc"])


def test_verify_trichotomy():
    ok, report = liefam.verify(2, 1, 0, ["-4", "-1", "0", "1", "4"])
    assert ok
    rep = load(report)
    assert rep["summary"] == "pass"
    assert rep["family_valid"] is True
    assert len(rep["records"]) == 5
    assert all(r["pass"] for r in rep["records"])
