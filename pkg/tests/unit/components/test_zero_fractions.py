"""Unit tests for zero continued fraction enumeration."""

import logging

import pytest

from src.cfrac import CqsFraction, hj_dual
from src.components import (
    ZeroFraction,
    blowup_oracle,
    brute_force_oracle,
    enumerate_zero_fractions,
    zero_fraction_keys,
)


def test_enumerate_19_7(f_19_7):
    fractions = enumerate_zero_fractions(f_19_7)
    assert zero_fraction_keys(fractions) == [(1, 2, 2, 1), (1, 3, 1, 2), (2, 2, 1, 3)]
    assert all(z.b == (2, 3, 2, 3) for z in fractions)
    assert not any(z.artin_convention for z in fractions)


def test_enumerate_4_1():
    keys = zero_fraction_keys(enumerate_zero_fractions(CqsFraction(4, 1)))
    assert keys == [(1, 2, 1), (2, 1, 2)]


def test_du_val_target_uses_artin_convention():
    (z,) = enumerate_zero_fractions(CqsFraction(5, 4))
    assert z.artin_convention
    assert z.k == (0,)
    assert z.b == (5,)
    assert z.d == (5,)
    assert z.r == 4


def test_du_val_target_is_not_a_warning(caplog):
    with caplog.at_level(logging.DEBUG, logger="src.components.zero_fractions"):
        enumerate_zero_fractions(CqsFraction(7, 6))
    assert "is empty" in caplog.text
    assert all(record.levelno < logging.WARNING for record in caplog.records)


@pytest.mark.parametrize("delta, omega", [(19, 7), (89, 33), (85, 49), (31, 12), (17, 5)])
def test_oracles_agree(delta: int, omega: int):
    b = hj_dual(CqsFraction(delta, omega))
    expected = zero_fraction_keys(enumerate_zero_fractions(CqsFraction(delta, omega)))
    assert blowup_oracle(b) == expected
    assert brute_force_oracle(b) == expected


def test_brute_force_oracle_refuses_large_boxes():
    assert brute_force_oracle((9,) * 8, limit=1000) is None


def test_zero_fraction_properties():
    z = ZeroFraction((2, 2, 1, 3), (2, 3, 2, 3))
    assert z.d == (0, 1, 1, 0)
    assert z.group_indices == (1, 2)
    assert z.r == 1
    assert str(z) == "[2,2,1,3]"


def test_zero_fraction_rejects_unbounded_entries():
    with pytest.raises(ValueError):
        ZeroFraction((3, 1), (2, 2))
    with pytest.raises(ValueError):
        ZeroFraction((1, 1), (2, 2, 2))
