"""Report documents: deterministic encoding, round trips, text rendering."""

from __future__ import annotations

import json
from fractions import Fraction

import pytest
from mpmath import mp

from admissible_sl2.exact import UniPoly
from admissible_sl2.numeric import ComplexVal, theta_eval_numeric
from admissible_sl2.qseries import QSeries, ThetaSpec
from admissible_sl2.report import (
    SCHEMA_VERSION,
    all_checks_pass,
    check,
    document,
    dumps,
    encode,
    parse_qseries,
    parse_rational,
    parse_weight,
    render_text,
)
from admissible_sl2.weights import AdmissibleWeight, enumerate_admissible, level_from_pq


def test_encode_scalars():
    assert encode(None) is None
    assert encode(True) is True
    assert encode(7) == 7
    assert encode("x") == "x"
    assert encode(Fraction(4)) == "4"
    assert encode(Fraction(-3, 2)) == "-3/2"
    assert encode(0.25) == "0.25"


def test_encode_poly_sorted_pairs():
    poly = UniPoly({3: Fraction(2), 0: Fraction(-1, 2)})
    assert encode(poly) == [[0, "-1/2"], [3, "2"]]


def test_encode_qseries_round_trip():
    series = QSeries.from_terms(
        [(Fraction(7, 24), Fraction(1)), (Fraction(31, 24), Fraction(2))], Fraction(2)
    )
    obj = encode(series)
    assert obj["D"] == series.denom
    assert obj["order"] == "2"
    assert parse_qseries(obj) == series


def test_encode_level_and_weight_round_trip():
    level = level_from_pq(3, 2)
    assert encode(level) == {"p": 3, "q": 2, "ell": "-1/2", "t": "3/2"}
    for w in enumerate_admissible(level):
        assert parse_weight(level, encode(w)) == w


def test_parse_rational():
    assert parse_rational("-3/2") == Fraction(-3, 2)
    assert parse_rational("4") == Fraction(4)
    with pytest.raises(ValueError):
        parse_rational("x/y")


def test_encode_complexval_preserves_precision():
    # a value computed at 192 bits must not be re-rounded to 53 on encoding
    val = theta_eval_numeric(
        ThetaSpec(0, 1, Fraction(0)), mp.mpc(0, "0.5"), tol=mp.mpf("1e-35"), prec=192
    )
    obj = encode(val)
    assert set(obj) == {"value", "err"}
    with mp.workprec(192):
        classical = mp.pi ** mp.mpf("0.25") / mp.gamma(mp.mpf(3) / 4)
        reread = mp.mpf(obj["value"][0])
        assert abs(reread - classical) < mp.mpf("1e-28")
    # 30 significant digits survive the string round trip
    digits = obj["value"][0].replace(".", "").lstrip("-0")
    assert len(digits) >= 25


def test_encode_mappings_with_fraction_keys():
    obj = encode({Fraction(-1, 2): 1, Fraction(3): 0})
    assert obj == {"-1/2": 1, "3": 0}


def test_encode_rejects_unknown_types():
    with pytest.raises(TypeError):
        encode(object())


def test_document_and_checks():
    doc = document(
        "weights",
        {"p": 3, "q": 2},
        {"count": 4},
        [check("a", True, "fine"), check("b", False, "broken")],
    )
    assert doc["schema_version"] == SCHEMA_VERSION
    assert doc["command"] == {"subcommand": "weights", "parameters": {"p": 3, "q": 2}}
    assert not all_checks_pass(doc)
    assert all_checks_pass(
        document("weights", {}, {}, [check("a", True)])
    )


def test_dumps_is_valid_deterministic_json():
    doc = document("demo", {"p": 3}, {"xs": [Fraction(1, 3), 2]}, [check("ok", True)])
    text = dumps(doc)
    assert text == dumps(doc)
    assert text.endswith("\n")
    parsed = json.loads(text)
    assert parsed["results"]["xs"] == ["1/3", 2]


def test_render_text_walks_the_encoded_document():
    doc = document(
        "fusion",
        {"p": 3, "q": 2, "j1": Fraction(1), "skipme": None},
        {"outputs": {Fraction(-3, 2): 1}, "flag": True},
        [check("oracles_agree", True, "3 routes"), check("gate", False, "blocked")],
    )
    text = render_text(doc)
    assert text.splitlines()[0] == "fusion (p=3, q=2, j1=1)"
    assert "skipme" not in text
    assert "outputs" in text and "-3/2: 1" in text
    assert "checks: 1/2 passed" in text
    assert "[pass] oracles_agree: 3 routes" in text
    assert "[FAIL] gate: blocked" in text


def test_render_text_deterministic():
    doc = document("demo", {"q": 1}, {"m": {"b": 1, "a": 2}}, [])
    assert render_text(doc) == render_text(doc)
