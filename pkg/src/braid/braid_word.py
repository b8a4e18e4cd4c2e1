"""Braid words over right (R_i) and left (L_i) antiflips."""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from typing import Iterator, Tuple

from src.errors import BraidWordSyntaxError

_TOKEN = re.compile(r"^([RL])([1-9]\d*)$")


class Direction(str, Enum):
    """Direction of an antiflip; L is the inverse of R."""

    RIGHT = "R"
    LEFT = "L"

    @property
    def inverse(self) -> "Direction":
        return Direction.LEFT if self is Direction.RIGHT else Direction.RIGHT


@dataclass(frozen=True, slots=True)
class BraidGenerator:
    direction: Direction
    index: int

    def inverse(self) -> "BraidGenerator":
        return BraidGenerator(self.direction.inverse, self.index)

    def __str__(self) -> str:
        return f"{self.direction.value}{self.index}"


@dataclass(frozen=True, slots=True)
class BraidWord:
    """Generators applied left to right."""

    steps: Tuple[BraidGenerator, ...] = ()

    @classmethod
    def parse(cls, text: str) -> "BraidWord":
        """Parse ``R2,R1,R2``; the empty string is the empty word."""
        body = text.strip()
        if not body:
            return cls()
        steps = []
        for raw in body.split(","):
            token = raw.strip()
            match = _TOKEN.match(token)
            if not match:
                raise BraidWordSyntaxError(f"invalid braid token {token!r}", token=token)
            steps.append(BraidGenerator(Direction(match.group(1)), int(match.group(2))))
        return cls(tuple(steps))

    @classmethod
    def of(cls, *tokens: str) -> "BraidWord":
        return cls.parse(",".join(tokens))

    def inverse(self) -> "BraidWord":
        return BraidWord(tuple(step.inverse() for step in reversed(self.steps)))

    def check_range(self, r: int) -> None:
        for step in self.steps:
            if not 1 <= step.index <= r:
                raise BraidWordSyntaxError(f"generator {step} outside 1..{r}", token=str(step))

    def __iter__(self) -> Iterator[BraidGenerator]:
        return iter(self.steps)

    def __len__(self) -> int:
        return len(self.steps)

    def __add__(self, other: "BraidWord") -> "BraidWord":
        return BraidWord(self.steps + other.steps)

    def __str__(self) -> str:
        return ",".join(str(step) for step in self.steps)


def mn_schedule(m: int) -> BraidWord:
    """Round j = 1..m antiflips curves m, m - 1, ..., j to the right."""
    if m < 1:
        raise ValueError(f"the schedule needs at least one curve, got {m}")
    steps = [
        BraidGenerator(Direction.RIGHT, index)
        for j in range(1, m + 1)
        for index in range(m, j - 1, -1)
    ]
    return BraidWord(tuple(steps))


__all__ = [
    "Direction",
    "BraidGenerator",
    "BraidWord",
    "mn_schedule",
]
