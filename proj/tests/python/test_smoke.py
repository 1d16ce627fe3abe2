import json
from pathlib import Path

import pytest

import curvesos

FIXTURES = Path(__file__).resolve().parents[2] / "fixtures"


def load(name):
    return json.loads((FIXTURES / name).read_text())


def test_triangle_is_no_with_mt4():
    r = curvesos.decide(["y", "x", "1 - x - y"])
    assert r.exit_code == 3
    assert r.report["answer"] == "No"
    assert "MT4" in json.dumps(r.report)


def test_circle_and_line_is_yes():
    r = curvesos.run("decide", load("circle_line.json"))
    assert r.exit_code == 0
    assert r.report["answer"] == "Yes"


def test_certify_then_verify():
    cert = curvesos.certify(["x^2 + y^2 - 1", "y"], "1 - x*y", seed=3)
    assert cert.exit_code == 0
    checked = curvesos.verify(cert.report)
    assert checked.ok
    assert checked.report["passed"] is True

    tampered = dict(cert.report, target="2 - x*y")
    assert curvesos.verify(tampered).exit_code == 3


def test_witness_verifies():
    w = curvesos.witness(["y", "x", "1 - x - y"])
    assert w.exit_code == 0
    assert curvesos.verify(w.report).ok


def test_saturation_reports_missing_generator():
    r = curvesos.saturation(["t^3"])
    assert r.exit_code == 3
    assert r.report["missing_generators"] == ["t"]
    assert curvesos.saturation(["x", "y"], factors=["x", "y"]).exit_code == 0


def test_fibres_and_moment_property():
    r = curvesos.fibres("x*y", ["x + y", "1 - x^2*y^2"], ["0"])
    assert r.exit_code == 3
    assert curvesos.smp(["x", "y"], []).exit_code == 0


def test_matches_cli_golden_output():
    expected = (FIXTURES / "golden" / "decide_triangle.json").read_text()
    r = curvesos.run("decide", load("triangle.json"))
    assert json.dumps(r.report, indent=2) + "\n" == expected


@pytest.mark.parametrize(
    "call",
    [
        lambda: curvesos.decide(["x +* y"]),
        lambda: curvesos.decide(["x"], tol=0),
        lambda: curvesos.run("frobnicate", {}),
    ],
)
def test_bad_input_exits_with_1(call):
    r = call()
    assert r.exit_code == 1
    assert r.report is None
    assert "error" in r.error


def test_canonical_poly():
    assert curvesos.canonical_poly("y*x + x*y") == curvesos.canonical_poly("2*x*y")
    with pytest.raises(Exception):
        curvesos.canonical_poly("x +")
