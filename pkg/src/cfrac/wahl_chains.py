"""Wahl singularities, their chains, and recognition of Wahl and T-singularities."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd, isqrt
from typing import Optional, Sequence

from .continued_fraction import CqsFraction, HJString, hj_eval, hj_expand


@dataclass(frozen=True, slots=True)
class WahlSingularity:
    """The Wahl singularity 1/n^2 (1, na - 1); (1, 1) is a smooth point."""

    n: int
    a: int

    def __post_init__(self) -> None:
        if (self.n, self.a) == (1, 1):
            return
        if self.n < 2 or not 0 < self.a < self.n or gcd(self.n, self.a) != 1:
            raise ValueError(f"invalid Wahl data ({self.n}, {self.a})")

    @classmethod
    def smooth(cls) -> "WahlSingularity":
        return cls(1, 1)

    @property
    def is_smooth(self) -> bool:
        return self.n == 1

    @property
    def left_a(self) -> int:
        """Value of a when the point sits to the left of a curve (0 for smooth)."""
        return 0 if self.is_smooth else self.a

    @property
    def right_a(self) -> int:
        """Value of a when the point sits to the right of a curve (1 for smooth)."""
        return self.a

    def fraction(self) -> CqsFraction:
        if self.is_smooth:
            return CqsFraction.smooth()
        return CqsFraction(self.n * self.n, self.n * self.a - 1)

    def __str__(self) -> str:
        return "*" if self.is_smooth else f"[{self.n}|{self.a}]"


@dataclass(frozen=True, slots=True)
class TSingularity:
    """Parameters (d, n, a) of 1/(d n^2) (1, d n a - 1); n = a = 1 is A_{d-1}."""

    d: int
    n: int
    a: int

    @property
    def wahl(self) -> WahlSingularity:
        return WahlSingularity.smooth() if self.n == 1 else WahlSingularity(self.n, self.a)

    @property
    def is_du_val(self) -> bool:
        return self.n == 1


@lru_cache(maxsize=4096)
def _wahl_parts(n: int, a: int) -> tuple[HJString, HJString]:
    return hj_expand(CqsFraction(n, n - a)), hj_expand(CqsFraction(n, a))


def wahl_cf(w: WahlSingularity) -> HJString:
    """The chain of n^2/(na - 1), glued from n/(n - a) and n/a."""
    if w.is_smooth:
        raise ValueError("a smooth point has no Wahl chain")
    x, y = _wahl_parts(w.n, w.a)
    return y[:-1] + (y[-1] + x[-1],) + tuple(reversed(x[:-1]))


def wahl_cf_dual(w: WahlSingularity) -> HJString:
    """The chain of n^2/(n^2 - na + 1)."""
    if w.is_smooth:
        raise ValueError("a smooth point has no Wahl chain")
    x, y = _wahl_parts(w.n, w.a)
    return x + (2,) + tuple(reversed(y))


def parse_wahl(entries: Sequence[int]) -> Optional[WahlSingularity]:
    """Recognize a canonical chain as a Wahl chain; the empty chain is smooth."""
    if not entries:
        return WahlSingularity.smooth()
    p, q = hj_eval(entries)
    n = isqrt(p) if p > 0 else 0
    if n < 2 or n * n != p or (q + 1) % n:
        return None
    a = (q + 1) // n
    if not 0 < a < n or gcd(n, a) != 1:
        return None
    return WahlSingularity(n, a)


def parse_T(f: CqsFraction) -> Optional[TSingularity]:
    """Find (d, n, a) with delta = d n^2 and omega = d n a - 1, if any."""
    if f.is_smooth:
        return None
    for n in range(1, isqrt(f.delta) + 1):
        if f.delta % (n * n):
            continue
        d = f.delta // (n * n)
        if (f.omega + 1) % (d * n):
            continue
        a = (f.omega + 1) // (d * n)
        if 0 < a <= n and gcd(n, a) == 1:
            return TSingularity(d, n, a)
    return None


__all__ = [
    "WahlSingularity",
    "TSingularity",
    "wahl_cf",
    "wahl_cf_dual",
    "parse_wahl",
    "parse_T",
]
