from fractions import Fraction
from pathlib import Path

import pytest

synco = pytest.importorskip("synco")

CORPUS = Path(__file__).resolve().parents[2] / "corpus"


def test_unit_ext():
    k = synco.unit(5)
    assert synco.ext(k, k, 0) == 1
    assert synco.ext(k, k, 1) == 1
    assert {n: d for n, d in synco.ext_table(k, synco.tate(1, 5)).items() if d} == {1: 1}


def test_shipped_data():
    point = synco.load(CORPUS / "point.json")
    assert point.cohomology(twist=0, degree=0) == 1
    assert [point.cohomology(twist=i, degree=1) for i in range(3)] == [1, 1, 1]
    gm = synco.load(CORPUS / "multiplicative_group.json")
    assert gm.cohomology(twist=1, degree=1) == 2


def test_elliptic_frobenius_and_duality():
    e = synco.load(CORPUS / "elliptic_curve.json")
    phi = e.rgamma.frobenius(1)
    assert synco.charpoly([[str(x) for x in row] for row in phi]) == [5, -1, 1]
    report = e.duality(twist=1, degree=1)
    assert report["preconditions_ok"] and report["isomorphism"]
    assert report["lhs"] == report["rhs"]


def test_degenerate_pairing_is_refused():
    report = synco.load(CORPUS / "degenerate_line.json").duality(twist=0, degree=0)
    assert not report["preconditions_ok"]
    assert "degenerate" in report["failure"]


def test_gysin_is_exact():
    f = synco.load(CORPUS / "line_double_cover.json")
    assert f.gysin(degree=0, twist=0) == [[Fraction(2)]]


def test_complex_round_trip_and_errors():
    c = synco.Complex.from_json({"lo": 0, "dims": [1, 1], "d": {"0": [["1/2"]]}})
    assert c.d(0) == [[Fraction(1, 2)]]
    assert c.betti() == {0: 0, 1: 0}
    with pytest.raises(synco.ValidationError):
        synco.Complex.from_json({"lo": 0, "dims": [1, 1, 1], "d": {"0": [[1]], "1": [[1]]}})
    with pytest.raises(synco.ValidationError):
        synco.load(CORPUS / "broken_differential.json")


def test_spectral_and_godement():
    dc = synco.load(CORPUS / "zigzag_square.json")
    ss = dc.spectral_sequence("col")
    assert ss["converges"] and ss["degenerates_at"] == 3
    sphere = synco.load(CORPUS / "site_sphere.json")
    for route in ("cech", "godement", "godement_squared"):
        assert sphere.cohomology({"constant": 1}, route)[:3] == [1, 0, 1]
