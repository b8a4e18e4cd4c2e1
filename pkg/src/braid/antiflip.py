"""Right and left antiflips of a Wahl resolution at one curve.

A right antiflip at curve i replaces (P_{i-1}, P_i) = (L, R) by (P', L); a
left antiflip replaces it by (R, P'). The new point P' is given in closed form
by the sign of s_i and, for K-negative curves, by the sign of t. Curves
next to the flipped one are rebuilt from their propagated signed invariants.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional

from src.cfrac import WahlSingularity
from src.chain import WahlResolution, contracts_to, curve_from_delta, delta_signed, print_chain
from src.errors import Degenerate, InvalidParameters, InvariantViolation, NonIntegral

from .braid_word import Direction

logger = logging.getLogger(__name__)


class AntiflipCase(str, Enum):
    """Signs of K.Gamma before and after the antiflip."""

    PLUS_MINUS = "(+/-)"
    MINUS_MINUS = "(-/-)"
    MINUS_PLUS = "(-/+)"


@dataclass(frozen=True, slots=True)
class AntiflipResult:
    """Output chain of one antiflip and the case that produced it."""

    resolution: WahlResolution
    direction: Direction
    index: int
    case: AntiflipCase
    new_point: WahlSingularity


def _make_point(n: int, a: int) -> WahlSingularity:
    if n == 1:
        return WahlSingularity.smooth()
    try:
        return WahlSingularity(n, a % n)
    except ValueError as exc:
        raise InvariantViolation(f"antiflip produced invalid Wahl data ({n}, {a % n})") from exc


def _exact(numerator: int, denominator: int, what: str) -> int:
    if numerator % denominator:
        raise NonIntegral(f"{what} = {Fraction(numerator, denominator)} is not an integer")
    return numerator // denominator


def _check_range(W: WahlResolution, i: int) -> None:
    if not 1 <= i <= W.r:
        raise InvalidParameters(f"curve index {i} outside 1..{W.r} for {print_chain(W)}")


def _key(point: WahlSingularity) -> tuple[int, int]:
    return point.n, point.a


def _k(s: int, left: WahlSingularity, right: WahlSingularity) -> Fraction:
    return Fraction(s, left.n * right.n)


def right_antiflip_step(W: WahlResolution, i: int, *, validate: bool = True) -> AntiflipResult:
    """R_i with the case that fired; ``validate=False`` skips contracting the result."""
    _check_range(W, i)
    sings, curves = list(W.sings), list(W.curves)
    left, right, c = sings[i - 1], sings[i], curves[i - 1]
    s = delta_signed(W, i)
    delta = abs(s)
    a_left, a_right = left.left_a, right.right_a

    if s >= 0:
        case = AntiflipCase.PLUS_MINUS
        n_new, a_new, s_new = delta * left.n + right.n, delta * a_left + a_right - (c - 1) * right.n, -delta
    else:
        t = delta * left.n - right.n
        if t == 0:
            raise Degenerate(f"t = 0 at curve {i} of {print_chain(W)}")
        if t > 0:
            case = AntiflipCase.MINUS_MINUS
            n_new, a_new, s_new = t, delta * a_left - a_right, -delta
        else:
            case = AntiflipCase.MINUS_PLUS
            n_new, a_new, s_new = -t, a_right - delta * a_left, delta
    new_point = _make_point(n_new, a_new)

    new_sings = sings[: i - 1] + [new_point, left] + sings[i + 1 :]
    new_curves = list(curves)
    new_curves[i - 1] = curve_from_delta(new_point, left, s_new)
    propagated: dict[int, int] = {i: s_new}
    if i >= 2:
        outer = sings[i - 2]
        s_before = delta_signed(W, i - 1)
        propagated[i - 1] = _exact(s_before * new_point.n - s_new * outer.n, left.n, f"s'_{i - 1}")
        new_curves[i - 2] = curve_from_delta(outer, new_point, propagated[i - 1])
    if i < W.r:
        outer = sings[i + 1]
        s_after = delta_signed(W, i + 1)
        propagated[i + 1] = _exact(s_after * left.n + s * outer.n, right.n, f"s'_{i + 1}")
        new_curves[i] = curve_from_delta(left, outer, propagated[i + 1])

    result = W.with_chain(new_sings, new_curves)
    _check_conservation(W, result, i, Direction.RIGHT)
    if delta == 0 and sorted([new_point, left], key=_key) != sorted([left, right], key=_key):
        raise InvariantViolation(f"K-trivial antiflip changed the points of {print_chain(W)}")
    if validate:
        contracts_to(result)
    logger.debug("R%s %s: %s -> %s", i, case.value, print_chain(W), print_chain(result))
    return AntiflipResult(result, Direction.RIGHT, i, case, new_point)


def left_antiflip_step(W: WahlResolution, i: int, *, validate: bool = True) -> AntiflipResult:
    _check_range(W, i)
    sings, curves = list(W.sings), list(W.curves)
    left, right, c = sings[i - 1], sings[i], curves[i - 1]
    s = delta_signed(W, i)
    delta = abs(s)
    a_left, a_right = left.left_a, right.right_a

    if s >= 0:
        case = AntiflipCase.PLUS_MINUS
        n_new, a_new, s_new = delta * right.n + left.n, delta * a_right + a_left + (c - 1) * left.n, -delta
    else:
        t = delta * right.n - left.n
        if t == 0:
            raise Degenerate(f"t = 0 at curve {i} of {print_chain(W)}")
        if t > 0:
            case = AntiflipCase.MINUS_MINUS
            n_new, a_new, s_new = t, delta * a_right - a_left, -delta
        else:
            case = AntiflipCase.MINUS_PLUS
            n_new, a_new, s_new = -t, a_left - delta * a_right, delta
    new_point = _make_point(n_new, a_new)

    new_sings = sings[: i - 1] + [right, new_point] + sings[i + 1 :]
    new_curves = list(curves)
    new_curves[i - 1] = curve_from_delta(right, new_point, s_new)
    if i >= 2:
        outer = sings[i - 2]
        s_before = delta_signed(W, i - 1)
        s_prime = _exact(s_before * right.n + s * outer.n, left.n, f"s'_{i - 1}")
        new_curves[i - 2] = curve_from_delta(outer, right, s_prime)
    if i < W.r:
        outer = sings[i + 1]
        s_after = delta_signed(W, i + 1)
        s_prime = _exact(s_after * new_point.n - s_new * outer.n, right.n, f"s'_{i + 1}")
        new_curves[i] = curve_from_delta(new_point, outer, s_prime)

    result = W.with_chain(new_sings, new_curves)
    _check_conservation(W, result, i, Direction.LEFT)
    if delta == 0 and sorted([right, new_point], key=_key) != sorted([left, right], key=_key):
        raise InvariantViolation(f"K-trivial antiflip changed the points of {print_chain(W)}")
    if validate:
        contracts_to(result)
    logger.debug("L%s %s: %s -> %s", i, case.value, print_chain(W), print_chain(result))
    return AntiflipResult(result, Direction.LEFT, i, case, new_point)


def _check_conservation(before: WahlResolution, after: WahlResolution, i: int, direction: Direction) -> None:
    """The flipped curve keeps its delta and K is redistributed onto its neighbors."""

    def k(W: WahlResolution, index: int) -> Fraction:
        return _k(delta_signed(W, index), W.sings[index - 1], W.sings[index])

    if abs(delta_signed(after, i)) != abs(delta_signed(before, i)):
        raise InvariantViolation(f"delta of curve {i} changed")
    if direction is Direction.RIGHT:
        checks = []
        if i >= 2:
            checks.append((k(after, i - 1) + k(after, i), k(before, i - 1)))
        if i < before.r:
            checks.append((k(after, i + 1), k(before, i) + k(before, i + 1)))
    else:
        checks = []
        if i < before.r:
            checks.append((k(after, i) + k(after, i + 1), k(before, i + 1)))
        if i >= 2:
            checks.append((k(after, i - 1), k(before, i - 1) + k(before, i)))
    for observed, expected in checks:
        if observed != expected:
            raise InvariantViolation(f"K is not conserved around curve {i}: {observed} != {expected}")


def right_antiflip(W: WahlResolution, i: int) -> WahlResolution:
    """R_i(W)."""
    return right_antiflip_step(W, i).resolution


def left_antiflip(W: WahlResolution, i: int) -> WahlResolution:
    """L_i(W), the inverse of R_i."""
    return left_antiflip_step(W, i).resolution


def antiflip_step(W: WahlResolution, direction: Direction, i: int, *, validate: bool = True) -> AntiflipResult:
    if direction is Direction.RIGHT:
        return right_antiflip_step(W, i, validate=validate)
    return left_antiflip_step(W, i, validate=validate)


def flip_is_monotone(before: WahlResolution, step: AntiflipResult) -> Optional[bool]:
    """For a K-negative curve that becomes K-positive, the adjacent indices must drop.

    Returns None when the step is not such a flip.
    """
    if step.case is not AntiflipCase.MINUS_PLUS:
        return None
    i = step.index
    old = sorted((before.sings[i - 1].n, before.sings[i].n))
    after = step.resolution
    new = sorted((after.sings[i - 1].n, after.sings[i].n))
    return all(x <= y for x, y in zip(new, old)) and new != old


__all__ = [
    "AntiflipCase",
    "AntiflipResult",
    "right_antiflip",
    "left_antiflip",
    "right_antiflip_step",
    "left_antiflip_step",
    "antiflip_step",
    "flip_is_monotone",
]
