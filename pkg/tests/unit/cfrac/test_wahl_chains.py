"""Unit tests for Wahl and T-singularity recognition."""

from math import gcd

import pytest

from src.cfrac import (
    CqsFraction,
    TSingularity,
    WahlSingularity,
    hj_eval,
    hj_expand,
    parse_T,
    parse_wahl,
    wahl_cf,
    wahl_cf_dual,
)


@pytest.mark.parametrize(
    "n, a, chain",
    [
        (2, 1, (4,)),
        (3, 1, (5, 2)),
        (3, 2, (2, 5)),
        (5, 2, (3, 5, 2)),
    ],
)
def test_wahl_cf(n: int, a: int, chain):
    point = WahlSingularity(n, a)
    assert wahl_cf(point) == chain
    assert parse_wahl(chain) == point


def test_wahl_cf_evaluates_to_wahl_fraction():
    point = WahlSingularity(23, 10)
    assert CqsFraction(*hj_eval(wahl_cf(point))) == point.fraction()


def test_wahl_cf_dual():
    assert wahl_cf_dual(WahlSingularity(2, 1)) == (2, 2, 2)
    assert wahl_cf_dual(WahlSingularity(3, 1)) == (2, 2, 2, 3)


def test_smooth_point():
    smooth = WahlSingularity.smooth()
    assert smooth.is_smooth
    assert (smooth.left_a, smooth.right_a) == (0, 1)
    assert str(smooth) == "*"
    assert smooth.fraction().is_smooth
    assert parse_wahl(()) == smooth
    with pytest.raises(ValueError):
        wahl_cf(smooth)


@pytest.mark.parametrize("n, a", [(4, 2), (3, 3), (1, 0), (5, 0)])
def test_invalid_wahl_data(n: int, a: int):
    with pytest.raises(ValueError):
        WahlSingularity(n, a)


def test_parse_wahl_rejects_non_wahl_chains():
    assert parse_wahl((3, 3)) is None
    assert parse_wahl((3, 4, 2)) is None


@pytest.mark.parametrize(
    "f, expected",
    [
        (CqsFraction(4, 1), TSingularity(1, 2, 1)),
        (CqsFraction(8, 3), TSingularity(2, 2, 1)),
        (CqsFraction(5, 4), TSingularity(5, 1, 1)),
        (CqsFraction(19, 7), None),
    ],
)
def test_parse_T(f: CqsFraction, expected):
    assert parse_T(f) == expected


def test_T_singularity_properties():
    assert TSingularity(5, 1, 1).is_du_val
    assert TSingularity(5, 1, 1).wahl.is_smooth
    assert TSingularity(2, 2, 1).wahl == WahlSingularity(2, 1)


def _wahl_points(n_max: int):
    for n in range(2, n_max + 1):
        for a in range(1, n):
            if gcd(n, a) == 1:
                yield WahlSingularity(n, a)


def test_parse_wahl_inverts_wahl_cf():
    for point in _wahl_points(60):
        assert parse_wahl(wahl_cf(point)) == point


def test_wahl_chains_are_expansions_of_wahl_fractions():
    for point in _wahl_points(60):
        n, a = point.n, point.a
        assert wahl_cf(point) == hj_expand(CqsFraction(n * n, n * a - 1))
        assert wahl_cf_dual(point) == hj_expand(CqsFraction(n * n, n * n - n * a + 1))
    assert wahl_cf_dual(WahlSingularity(5, 2)) == hj_expand(CqsFraction(25, 16))
