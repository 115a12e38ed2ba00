import math

import pytest

import rgeom


def test_catalog_names():
    names = rgeom.catalog_names()
    assert "round-sphere-S2" in names
    assert "cigar" in names


def test_curvature_sphere():
    c = rgeom.curvature("round-sphere-S2", [0.0, 0.0])
    assert c["scalar"] == pytest.approx(2.0, abs=1e-10)
    # Ric = g = 4 delta at the origin of the stereographic chart
    assert c["ricci"][0][0] == pytest.approx(4.0, abs=1e-10)
    assert c["ricci"][0][1] == pytest.approx(0.0, abs=1e-12)


def test_symbolic_kernel():
    assert rgeom.evaluate("4/(1+x^2+y^2)^2", ["x", "y"], [0, 0]) == 4.0
    d = rgeom.derivative("x^2*y", ["x", "y"], "x")
    assert rgeom.evaluate(d, ["x", "y"], [3.0, 2.0]) == pytest.approx(12.0)
    with pytest.raises(rgeom.ExprParseError):
        rgeom.derivative("x +", ["x", "y"], "x")
    with pytest.raises(rgeom.DomainError):
        rgeom.evaluate("1/x", ["x"], [0.0])


def test_catalog_manifest_roundtrip():
    m = rgeom.catalog_manifest("gaussian-shrinker")
    assert m["version"] == 1
    report = rgeom.check_manifest(m)
    assert report["all_ok"] is True
    kinds = {c["kind"] for c in report["checks"]}
    assert "gradient_soliton" in kinds


def test_failing_check_is_reported():
    m = rgeom.catalog_manifest("flat-plane")
    # the dilation field is conformal, not Killing
    m["checks"] = [{"kind": "killing", "field": "dilation", "id": "bad"}]
    report = rgeom.check_manifest(m)
    assert report["all_ok"] is False
    (chk,) = report["checks"]
    assert chk["verdict"] == "fail"
    assert chk["max"] == pytest.approx(math.sqrt(8.0), abs=1e-12)


def test_selftest():
    report = rgeom.selftest()
    assert report["all_ok"] is True
    assert len(report["checks"]) > 30
