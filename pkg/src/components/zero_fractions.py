"""Zero continued fractions bounded by the dual expansion.

K(delta/omega) = {[k_1, ..., k_s] = 0 : 1 <= k_i <= b_i} indexes the deformation
components. Every zero fraction of length >= 2 is an iterated blow-up of
[1, 1]; the enumerator walks that tree backwards (removing a 1 and its
neighbor increments) and memoizes on the remaining bounds.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import product
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from src.cfrac import CqsFraction, HJString, blow_down, format_hj, hj_dual, hj_eval
from src.errors import InvariantViolation

logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class ZeroFraction:
    """A member k of K(delta/omega) together with the bounds b it lives under.

    ``artin_convention`` marks the conventional k = (0,) reported for Du Val
    targets, whose set K is empty.
    """

    k: HJString
    b: HJString
    artin_convention: bool = False

    def __post_init__(self) -> None:
        if len(self.k) != len(self.b):
            raise ValueError(f"{format_hj(self.k)} and {format_hj(self.b)} differ in length")
        if not self.artin_convention and any(not 1 <= k <= b for k, b in zip(self.k, self.b)):
            raise ValueError(f"{format_hj(self.k)} is not bounded by {format_hj(self.b)}")

    @property
    def d(self) -> HJString:
        return tuple(b - k for k, b in zip(self.k, self.b))

    @property
    def group_indices(self) -> Tuple[int, ...]:
        """0-based positions i_1 < ... < i_e with d_i != 0."""
        return tuple(i for i, value in enumerate(self.d) if value)

    @property
    def r(self) -> int:
        return sum(self.d) - 1

    def __str__(self) -> str:
        return format_hj(self.k)


def _blow_up(k: HJString, j: int) -> HJString:
    """Insert a 1 at position j and raise its neighbors."""
    left = list(k[:j])
    right = list(k[j:])
    if left:
        left[-1] += 1
    if right:
        right[0] += 1
    return tuple(left) + (1,) + tuple(right)


def _bounded_zero_fractions(bounds: HJString) -> FrozenSet[HJString]:
    memo: Dict[HJString, FrozenSet[HJString]] = {}

    def search(limits: HJString) -> FrozenSet[HJString]:
        cached = memo.get(limits)
        if cached is not None:
            return cached
        length = len(limits)
        found: set[HJString] = set()
        if length == 2:
            if limits[0] >= 1 and limits[1] >= 1:
                found.add((1, 1))
        # a zero fraction of length m has entry sum >= 2m - 2
        elif length > 2 and sum(limits) >= 2 * length - 2:
            for j in range(length):
                shorter = list(limits[:j] + limits[j + 1 :])
                if j > 0:
                    shorter[j - 1] -= 1
                if j < length - 1:
                    shorter[j] -= 1
                if min(shorter) < 1:
                    continue
                for smaller in search(tuple(shorter)):
                    found.add(_blow_up(smaller, j))
        result = frozenset(found)
        memo[limits] = result
        return result

    return search(tuple(bounds))


def enumerate_zero_fractions(f: CqsFraction) -> List[ZeroFraction]:
    """All of K(delta/omega), lexicographically ordered.

    Du Val targets get the single conventional entry k = (0,).
    """
    b = hj_dual(f)
    members = sorted(_bounded_zero_fractions(b))
    result = []
    for k in members:
        if blow_down(k) != (0,):
            raise InvariantViolation(f"{format_hj(k)} was generated but does not blow down to [0]")
        if hj_eval(k)[0] != 0:
            raise InvariantViolation(f"{format_hj(k)} blows down to [0] but evaluates to {hj_eval(k)}")
        result.append(ZeroFraction(k, b))
    if not result:
        logger.debug("K(%s) is empty; reporting the Artin component with k = (0,)", f)
        result.append(ZeroFraction((0,), b, artin_convention=True))
    logger.debug("Enumerated %s zero fractions for %s", len(result), f)
    return result


def blowup_oracle(bounds: Sequence[int]) -> List[HJString]:
    """Grow every zero fraction from [1, 1] and keep those bounded by ``bounds``."""
    b = tuple(bounds)
    size = len(b)
    if size < 2:
        return []
    budget = sum(b)
    level: set[HJString] = {(1, 1)}
    for length in range(2, size):
        remaining = size - length - 1
        grown: set[HJString] = set()
        for k in level:
            for j in range(length + 1):
                candidate = _blow_up(k, j)
                if _viable(candidate, b, remaining, budget):
                    grown.add(candidate)
        level = grown
    return sorted(k for k in level if all(x <= y for x, y in zip(k, b)))


def _viable(k: HJString, b: HJString, remaining: int, budget: int) -> bool:
    # each later blow-up adds at least 2 to the entry sum
    if sum(k) + 2 * remaining > budget:
        return False
    # entries only grow and shift right by at most ``remaining`` places
    return all(value <= max(b[i : i + remaining + 1]) for i, value in enumerate(k))


def brute_force_oracle(bounds: Sequence[int], limit: int = 200_000) -> Optional[List[HJString]]:
    """Test every k with 1 <= k_i <= b_i; None when the box exceeds ``limit``."""
    size = 1
    for value in bounds:
        size *= value
        if size > limit:
            return None
    return [k for k in product(*(range(1, value + 1) for value in bounds)) if blow_down(k) == (0,)]


def zero_fraction_keys(fractions: Iterable[ZeroFraction]) -> List[HJString]:
    return [z.k for z in fractions]


__all__ = [
    "ZeroFraction",
    "enumerate_zero_fractions",
    "blowup_oracle",
    "brute_force_oracle",
    "zero_fraction_keys",
]
