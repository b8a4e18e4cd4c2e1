"""Hirzebruch-Jung continued fractions: expansion, evaluation, duality and blow-down."""

from __future__ import annotations

import re
from dataclasses import dataclass
from math import gcd
from typing import Iterable, Sequence, Tuple

HJString = Tuple[int, ...]

_FRACTION_PATTERN = re.compile(r"^\s*(\d+)\s*/\s*(\d+)\s*$")
_HJ_PATTERN = re.compile(r"^\s*\[\s*(-?\d+(\s*,\s*-?\d+)*)?\s*\]\s*$")


@dataclass(frozen=True, slots=True)
class CqsFraction:
    """Type (delta, omega) of the cyclic quotient singularity 1/delta(1, omega).

    ``CqsFraction(1, 0)`` is the smooth value produced by contractions that
    consume the whole chain.
    """

    delta: int
    omega: int

    def __post_init__(self) -> None:
        if self.delta == 1:
            if self.omega != 0:
                raise ValueError("the smooth value is 1/0")
            return
        if self.delta < 2 or not 0 < self.omega < self.delta:
            raise ValueError(f"need 0 < omega < delta, got {self.delta}/{self.omega}")
        if gcd(self.delta, self.omega) != 1:
            raise ValueError(f"{self.delta}/{self.omega} is not coprime")

    @classmethod
    def parse(cls, text: str) -> "CqsFraction":
        match = _FRACTION_PATTERN.match(text)
        if not match:
            raise ValueError(f"expected a fraction 'DELTA/OMEGA', got {text!r}")
        return cls(int(match.group(1)), int(match.group(2)))

    @classmethod
    def smooth(cls) -> "CqsFraction":
        return cls(1, 0)

    @property
    def is_smooth(self) -> bool:
        return self.delta == 1

    @property
    def is_du_val(self) -> bool:
        return self.delta >= 2 and self.omega == self.delta - 1

    def dual(self) -> "CqsFraction":
        return CqsFraction(self.delta, self.delta - self.omega)

    def __str__(self) -> str:
        return f"{self.delta}/{self.omega}"


def format_hj(entries: Iterable[int]) -> str:
    """Canonical text form ``[3,4,2]``."""
    return "[" + ",".join(str(e) for e in entries) + "]"


def parse_hj(text: str) -> HJString:
    if not _HJ_PATTERN.match(text):
        raise ValueError(f"expected a continued fraction like '[3,4,2]', got {text!r}")
    body = text.strip()[1:-1].strip()
    if not body:
        return ()
    return tuple(int(part) for part in body.split(","))


def hj_expand(f: CqsFraction) -> HJString:
    """Expand delta/omega = [e_1, ..., e_l] with every e_i >= 2."""
    entries = []
    delta, omega = f.delta, f.omega
    while omega != 0:
        e = -(-delta // omega)
        entries.append(e)
        delta, omega = omega, e * omega - delta
    return tuple(entries)


def hj_eval(entries: Sequence[int]) -> Tuple[int, int]:
    """Evaluate through the matrix product prod [[e, -1], [1, 0]].

    Returns the first column (p, q); p == 0 is the zero value and the empty
    string gives (1, 0).
    """
    m00, m01, m10, m11 = 1, 0, 0, 1
    for e in entries:
        m00, m01 = m00 * e + m01, -m00
        m10, m11 = m10 * e + m11, -m10
    return m00, m10


def hj_dual(f: CqsFraction) -> HJString:
    """The expansion of delta/(delta - omega)."""
    if f.is_smooth:
        raise ValueError("the smooth value has no dual expansion")
    return hj_expand(f.dual())


def blow_down(entries: Sequence[int], *, from_right: bool = False) -> HJString:
    """Contract (-1)-curves until no entry equals 1.

    The leftmost 1 is always contracted first; ``from_right`` mirrors the order.
    """
    if from_right:
        return tuple(reversed(blow_down(tuple(reversed(entries)))))

    chain = list(entries)
    start = 0
    while True:
        try:
            index = chain.index(1, start)
        except ValueError:
            return tuple(chain)
        del chain[index]
        if index > 0:
            chain[index - 1] -= 1
        if index < len(chain):
            chain[index] -= 1
        # only the left neighbor can have become a 1 before the next scan position
        start = max(index - 1, 0)


def riemenschneider_zero(f: CqsFraction) -> bool:
    """Check that [b_s, ..., b_1, 1, e_1, ..., e_l] contracts to [0]."""
    joined = tuple(reversed(hj_dual(f))) + (1,) + hj_expand(f)
    return blow_down(joined) == (0,)


def is_canonical(entries: Sequence[int]) -> bool:
    return all(e >= 2 for e in entries)


__all__ = [
    "HJString",
    "CqsFraction",
    "format_hj",
    "parse_hj",
    "hj_expand",
    "hj_eval",
    "hj_dual",
    "blow_down",
    "riemenschneider_zero",
    "is_canonical",
]
