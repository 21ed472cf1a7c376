"""Smoke tests for the python bindings."""

from decimal import Decimal, getcontext

import pytest

import monospec


getcontext().prec = 60


def dec(s):
    return Decimal(s.replace("e", "E")) if ("e" in s or "E" in s) else Decimal(s)


def test_version():
    assert monospec.__version__


def test_eval_expr():
    v = dec(monospec.eval_expr("1/2 + 5*sqrt(3)/18"))
    assert abs(v - (Decimal(1) / 2 + 5 * Decimal(3).sqrt() / 18)) < Decimal("1e-45")


def test_es_solve_21():
    d = monospec.es_solve(2, 1)
    assert abs(dec(d["t"]) - Decimal("0.5")) < Decimal("1e-45")
    assert abs(dec(d["b"])) < Decimal("1e-45")


def test_es_solve_invalid_pair():
    with pytest.raises(monospec.ConstraintError):
        monospec.es_solve(2, 4)


def test_hyp_ratio_half_is_one():
    assert abs(dec(monospec.hyp_ratio(3, "1/2")) - 1) < Decimal("1e-45")


def test_ramanujan_four_over_pi():
    s = dec(monospec.ramanujan_sum(1, 120))
    pi = dec(monospec.eval_expr("pi"))
    assert abs(s - 4 / pi) < Decimal("1e-58")


def test_charge2_relation_frozen():
    r = monospec.charge2_es_check("1/sqrt(2)")
    assert r["relation"] == [-1, 0]
    assert r["primitive"] is True
    assert dec(r["residual"]) < Decimal("1e-35")


def test_h1_roundtrip():
    curve = monospec.build_table1(4)
    rep = monospec.check_h1(curve)
    assert rep["ok"] is True


def test_find_relation_golden_ratio():
    rel = monospec.find_relation(["1", "(1+sqrt(5))/2", "((1+sqrt(5))/2)^2"], 100)
    assert rel is not None
    c = rel["coeffs"]
    assert sorted(abs(v) for v in c) == [1, 1, 1]


def test_probe_cube_root_two():
    poly = monospec.algebraicity_probe("2^(1/3)", 3, 10)
    assert poly == [-2, 0, 0, 1]


def test_richelot_matches_expression():
    a, b = monospec.richelot_periods(["-5", "-3", "-1", "1", "3", "5"])
    assert dec(a) == dec(b)  # symmetric sextuple
    assert abs(dec(a) - Decimal("0.185081164873560845689126")) < Decimal("1e-20")


def test_precision_refusal():
    with pytest.raises(monospec.PrecisionError):
        monospec.find_relation(["pi", "1"], 1e40, 50)
