"""Self-verification suites: bounds, the c2 constant closed form, small runs."""

from __future__ import annotations

from fractions import Fraction

import pytest

from admissible_sl2.errors import ParamOutOfRangeError
from admissible_sl2.verify import (
    SUITES,
    c2_expected_constant,
    coprime_levels,
    run_suites,
)
from admissible_sl2.weights import level_from_pq


def test_suite_names():
    assert SUITES == ("fusion", "mff", "characters")


def test_coprime_levels():
    levels = coprime_levels(4, 3)
    pairs = [(lv.p, lv.q) for lv in levels]
    assert pairs == [(2, 1), (2, 3), (3, 1), (3, 2), (4, 1), (4, 3)]


def test_c2_expected_constant_fixtures():
    assert c2_expected_constant(level_from_pq(2, 1)) == Fraction(-1)
    assert c2_expected_constant(level_from_pq(3, 1)) == Fraction(2)
    assert c2_expected_constant(level_from_pq(3, 2)) == Fraction(3, 2)
    for p in range(2, 7):
        for q in range(1, 6):
            from math import gcd

            if gcd(p, q) == 1:
                assert c2_expected_constant(level_from_pq(p, q)) != 0


def test_run_suites_guards():
    with pytest.raises(ParamOutOfRangeError):
        run_suites("all", 9, 2)
    with pytest.raises(ParamOutOfRangeError):
        run_suites("all", 1, 2)
    with pytest.raises(ParamOutOfRangeError):
        run_suites("all", 3, 0)
    with pytest.raises(ParamOutOfRangeError):
        run_suites("all", 3, 7)
    with pytest.raises(ParamOutOfRangeError):
        run_suites("bogus", 3, 2)


def test_run_suites_small_all_pass():
    results, checks = run_suites("all", 3, 2)
    assert results["checks_total"] == len(checks) > 0
    assert results["checks_failed"] == 0
    assert all(c["status"] == "pass" for c in checks)
    names = {c["name"] for c in checks}
    # every suite contributes its check families
    assert any(n.startswith("fusion_three_way") for n in names)
    assert any(n.startswith("classical_limit") for n in names)
    assert any(n.startswith("operator_identities") for n in names)
    assert any(n.startswith("c2_reduction") for n in names)
    assert any(n.startswith("theta_ratio") for n in names)
    assert any(n.startswith("series_numeric") for n in names)


def test_run_single_suite():
    results, checks = run_suites("mff", 3, 1)
    assert list(results["suites"]) == ["mff"]
    families = {"operator_identities", "annihilation", "bimodule_dims", "c2_reduction"}
    assert all(any(c["name"].startswith(f) for f in families) for c in checks)
    assert results["checks_failed"] == 0
