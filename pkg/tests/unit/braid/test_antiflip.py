"""Unit tests for right and left antiflips."""

from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.braid import (
    AntiflipCase,
    flip_is_monotone,
    left_antiflip,
    left_antiflip_step,
    right_antiflip,
    right_antiflip_step,
)
from src.cfrac import CqsFraction, WahlSingularity
from src.chain import contracts_to, print_chain
from src.components import components
from src.errors import Degenerate, InvalidParameters


@pytest.mark.parametrize(
    "before, after, case",
    [
        ("[2|1]-(1)-[3|1]", "[5|2]-(1)-[2|1]", AntiflipCase.PLUS_MINUS),
        ("[3|2]-(1)-[5|2]", "[17|10]-(1)-[3|2]", AntiflipCase.PLUS_MINUS),
        ("[5|2]-(1)-[23|10]", "[3|2]-(1)-[5|2]", AntiflipCase.MINUS_PLUS),
    ],
)
def test_right_antiflip(make_resolution, before: str, after: str, case: AntiflipCase):
    W = make_resolution(before)
    step = right_antiflip_step(W, 1)
    assert print_chain(step.resolution) == after
    assert step.case is case
    assert step.resolution.target == W.target
    assert contracts_to(step.resolution) == W.target


def test_right_antiflip_new_point(make_resolution):
    step = right_antiflip_step(make_resolution("[2|1]-(1)-[3|1]"), 1)
    assert step.new_point == WahlSingularity(5, 2)
    assert step.resolution.target == CqsFraction(19, 7)


@pytest.mark.parametrize(
    "before, after",
    [
        ("[3|2]-(1)-[5|2]", "[5|2]-(1)-[23|10]"),
        ("[5|2]-(1)-[23|10]", "[23|10]-(1)-[87|38]"),
    ],
)
def test_left_antiflip(make_resolution, before: str, after: str):
    assert print_chain(left_antiflip(make_resolution(before), 1)) == after


@pytest.mark.parametrize("text", ["[2|1]-(1)-[3|1]", "[3|2]-(1)-[5|2]", "[5|2]-(1)-[23|10]"])
def test_left_undoes_right(make_resolution, text: str):
    W = make_resolution(text)
    assert left_antiflip(right_antiflip(W, 1), 1) == W
    assert right_antiflip(left_antiflip(W, 1), 1) == W


def test_degenerate_case(make_resolution):
    W = make_resolution("[2|1]-(1)-[4|3]")
    assert W.target == CqsFraction(4, 1)
    with pytest.raises(Degenerate):
        right_antiflip(W, 1)


def test_index_out_of_range(make_resolution):
    W = make_resolution("[2|1]-(1)-[3|1]")
    with pytest.raises(InvalidParameters):
        right_antiflip(W, 2)
    with pytest.raises(InvalidParameters):
        left_antiflip_step(W, 0)


def test_flip_is_monotone(make_resolution):
    W = make_resolution("[5|2]-(1)-[23|10]")
    assert flip_is_monotone(W, right_antiflip_step(W, 1)) is True
    V = make_resolution("[2|1]-(1)-[3|1]")
    assert flip_is_monotone(V, right_antiflip_step(V, 1)) is None


def test_k_trivial_antiflip_swaps_points(make_resolution):
    W = make_resolution("[2|1]-(1)-[2|1]-(1)-[2|1]")
    assert right_antiflip(W, 1) == W


@st.composite
def multi_curve_resolutions(draw):
    delta = draw(st.integers(min_value=5, max_value=40))
    omega = draw(st.integers(min_value=1, max_value=delta - 2).filter(lambda w: gcd(delta, w) == 1))
    reports = components(CqsFraction(delta, omega))
    report = draw(st.sampled_from(reports))
    return report.m_res


@given(multi_curve_resolutions(), st.data())
@settings(max_examples=60, deadline=None)
def test_antiflips_are_mutually_inverse(W, data):
    if W.r == 0:
        return
    i = data.draw(st.integers(min_value=1, max_value=W.r))
    flipped = right_antiflip(W, i)
    assert left_antiflip(flipped, i) == W
