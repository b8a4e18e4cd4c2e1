"""Unit tests for braid word parsing and the M to N schedule."""

import pytest

from src.braid import BraidGenerator, BraidWord, Direction, mn_schedule
from src.errors import BraidWordSyntaxError


def test_parse_and_print():
    word = BraidWord.parse("R2, R1,R2")
    assert len(word) == 3
    assert word.steps[0] == BraidGenerator(Direction.RIGHT, 2)
    assert str(word) == "R2,R1,R2"


def test_empty_word():
    assert len(BraidWord.parse("")) == 0
    assert str(BraidWord()) == ""


def test_inverse():
    assert str(BraidWord.of("R1", "L2", "R3").inverse()) == "L3,R2,L1"
    assert Direction.LEFT.inverse is Direction.RIGHT


@pytest.mark.parametrize("text, token", [("R0", "R0"), ("X1", "X1"), ("R1,,R2", ""), ("R01", "R01")])
def test_parse_errors(text: str, token: str):
    with pytest.raises(BraidWordSyntaxError) as excinfo:
        BraidWord.parse(text)
    assert excinfo.value.token == token


def test_check_range():
    word = BraidWord.parse("R1,L2")
    word.check_range(2)
    with pytest.raises(BraidWordSyntaxError):
        word.check_range(1)


def test_mn_schedule():
    assert str(mn_schedule(1)) == "R1"
    assert str(mn_schedule(2)) == "R2,R1,R2"
    assert str(mn_schedule(3)) == "R3,R2,R1,R3,R2,R3"
    assert len(mn_schedule(5)) == 15
    with pytest.raises(ValueError):
        mn_schedule(0)
