"""Unit tests for discrepancies and signed invariants."""

from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.cfrac import CqsFraction, WahlSingularity
from src.chain import (
    curve_from_delta,
    delta_signed,
    discrepancies,
    extremal_delta_identity,
    k_dot_gamma,
    signed_deltas,
    signed_invariant,
    toric_k_dot_gamma,
)
from src.errors import NoSuchCurve

SMOOTH = WahlSingularity.smooth()


def test_discrepancies_of_wahl_points():
    assert discrepancies(WahlSingularity(2, 1)).values == (Fraction(-1, 2),)
    profile = discrepancies(WahlSingularity(3, 1))
    assert profile.chain == (5, 2)
    assert profile.first == Fraction(-2, 3)
    assert profile.last == Fraction(-1, 3)


def test_discrepancies_of_du_val_and_smooth():
    assert discrepancies(CqsFraction(5, 4)).is_du_val
    assert discrepancies(SMOOTH).values == ()
    assert discrepancies(CqsFraction.smooth()).first == 0


@pytest.mark.parametrize(
    "left, c, right, expected",
    [
        (WahlSingularity(2, 1), 1, WahlSingularity(3, 1), Fraction(1, 6)),
        (WahlSingularity(5, 2), 1, WahlSingularity(2, 1), Fraction(-1, 10)),
        (SMOOTH, 2, SMOOTH, Fraction(0)),
        (SMOOTH, 3, WahlSingularity(2, 1), Fraction(3, 2)),
    ],
)
def test_k_dot_gamma_agrees_with_closed_form(left, c, right, expected):
    assert k_dot_gamma(left, c, right) == expected
    assert toric_k_dot_gamma(left, c, right) == expected
    assert signed_invariant(left, c, right) == expected * left.n * right.n


def test_delta_signed(make_resolution):
    W = make_resolution("[2|1]-(1)-[3|1]")
    assert W.target == CqsFraction(19, 7)
    assert delta_signed(W, 1) == 1
    assert signed_deltas(make_resolution("*-(3)-*-(4)-*-(2)-*")) == (1, 2, 0)
    with pytest.raises(IndexError):
        delta_signed(W, 2)


def test_curve_from_delta():
    assert curve_from_delta(WahlSingularity(2, 1), WahlSingularity(3, 1), 1) == 1
    assert curve_from_delta(SMOOTH, SMOOTH, 0) == 2
    assert curve_from_delta(SMOOTH, SMOOTH, 1) == 3
    assert curve_from_delta(SMOOTH, WahlSingularity(2, 1), 3) == 3


def test_curve_from_delta_rejects_impossible_values():
    with pytest.raises(NoSuchCurve):
        curve_from_delta(SMOOTH, SMOOTH, -2)
    with pytest.raises(NoSuchCurve):
        curve_from_delta(WahlSingularity(2, 1), WahlSingularity(3, 1), 2)


def test_extremal_delta_identity(make_resolution):
    assert extremal_delta_identity(make_resolution("[2|1]-(1)-[3|1]"))
    assert extremal_delta_identity(make_resolution("[5|2]-(1)-[23|10]"))
    with pytest.raises(ValueError):
        extremal_delta_identity(make_resolution("*-(3)-[2|1]-(2)-*"))


@st.composite
def wahl_points(draw, n_max: int = 40) -> WahlSingularity:
    n = draw(st.integers(min_value=1, max_value=n_max))
    if n == 1:
        return SMOOTH
    a = draw(st.integers(min_value=1, max_value=n - 1).filter(lambda x: gcd(n, x) == 1))
    return WahlSingularity(n, a)


@pytest.mark.property_based
@given(wahl_points(), st.integers(min_value=1, max_value=5), wahl_points())
@settings(max_examples=200, deadline=None)
def test_linear_solve_matches_closed_form(left, c, right):
    expected = toric_k_dot_gamma(left, c, right)
    assert k_dot_gamma(left, c, right) == expected
    assert signed_invariant(left, c, right) == expected * left.n * right.n
