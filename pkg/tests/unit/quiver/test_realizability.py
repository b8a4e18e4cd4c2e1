"""Unit tests for realizability of triangle quivers Q_{a,b,c}."""

from itertools import permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.chain import contracts_to, print_chain
from src.errors import InvalidParameters
from src.quiver import check_Q_abc, enumerate_c, predicted_c


def test_smooth_indices():
    witness = check_Q_abc(1, 1, 1)
    assert witness.lam == 2
    assert witness.epsilon_a is None
    assert witness.epsilon_b is None
    assert print_chain(witness.chain) == "*-(3)-*"


def test_mixed_indices():
    witness = check_Q_abc(2, 1, 3)
    assert witness.lam == 3
    assert witness.epsilon_a == 1
    assert print_chain(witness.chain) == "[2|1]-(3)-*"
    assert contracts_to(witness.chain) == witness.chain.target


@pytest.mark.parametrize("c, realizable", [(1, True), (2, False), (5, True), (8, False)])
def test_parity_for_index_two(c: int, realizable: bool):
    assert (check_Q_abc(2, 1, c) is not None) == realizable


def test_enumerate_c():
    assert list(enumerate_c(1, 1, 10)) == list(range(1, 11))
    assert list(enumerate_c(2, 1, 10)) == [1, 3, 5, 7, 9]
    assert list(enumerate_c(2, 2, 20)) == [4, 8, 12, 16, 20]


def test_vanishing_index():
    witness = check_Q_abc(0, 3, 3)
    assert witness is not None
    assert witness.chain is None
    assert check_Q_abc(0, 3, 2) is None
    assert check_Q_abc(0, 0, 0) is not None


def test_c_zero_with_positive_indices():
    assert check_Q_abc(2, 3, 0) is None


def test_predicted_c():
    assert predicted_c(1, 1, 4, None, None) == 3
    assert predicted_c(2, 1, 3, 1, None) == 3
    assert predicted_c(3, 2, 2, 1, 1) == 1


def test_invalid_parameters():
    with pytest.raises(InvalidParameters):
        check_Q_abc(-1, 2, 3)
    with pytest.raises(InvalidParameters):
        enumerate_c(0, 1, 5)


@pytest.mark.parametrize("abc, realizable", [((1, 1, 1), True), ((2, 1, 3), True), ((2, 2, 4), True), ((2, 1, 2), False)])
def test_realizability_is_closed_under_permutations(abc, realizable):
    for a, b, c in set(permutations(abc)):
        assert (check_Q_abc(a, b, c) is not None) == realizable, (a, b, c)


@pytest.mark.property_based
@given(
    st.integers(min_value=1, max_value=6),
    st.integers(min_value=1, max_value=6),
    st.integers(min_value=1, max_value=12),
)
@settings(max_examples=150, deadline=None)
def test_swapping_indices_keeps_realizability(a, b, c):
    assert (check_Q_abc(a, b, c) is None) == (check_Q_abc(b, a, c) is None)
