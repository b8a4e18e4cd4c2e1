"""Braid words acting on Wahl resolutions."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import List, Optional

from src.chain import WahlResolution, contracts_to, print_chain, signed_deltas
from src.errors import InvariantViolation, ResolutionError
from src.observability.telemetry_service import TelemetryService

from .antiflip import AntiflipResult, antiflip_step, flip_is_monotone
from .braid_word import BraidGenerator, BraidWord, Direction, mn_schedule

logger = logging.getLogger(__name__)


def trace_word(
    W: WahlResolution,
    word: BraidWord,
    *,
    telemetry: Optional[TelemetryService] = None,
) -> List[AntiflipResult]:
    """Every intermediate antiflip of ``word``; a failing step gets its position as a note."""
    results: List[AntiflipResult] = []
    current = W
    for position, step in enumerate(word, start=1):
        try:
            result = antiflip_step(current, step.direction, step.index)
        except ResolutionError as exc:
            exc.add_note(f"at step {position} ({step}) of {word} on {print_chain(current)}")
            if telemetry:
                telemetry.record_error("braid", type(exc).__name__, str(exc))
            raise
        if telemetry:
            telemetry.record_antiflip(step.direction.value, result.case.value)
        results.append(result)
        current = result.resolution
    return results


def apply_word(
    W: WahlResolution,
    word: BraidWord,
    *,
    telemetry: Optional[TelemetryService] = None,
) -> WahlResolution:
    """Apply the generators of ``word`` left to right; every intermediate chain is validated."""
    steps = trace_word(W, word, telemetry=telemetry)
    return steps[-1].resolution if steps else W


def _is_fixed(W: WahlResolution) -> bool:
    # one repeated point on K-trivial curves: every antiflip returns the same chain
    return len(set(W.sings)) == 1 and not any(signed_deltas(W))


def n_resolution_of(m_res: WahlResolution) -> WahlResolution:
    """The N-resolution reached from an M-resolution by the M to N schedule.

    Intermediate chains are not contracted; the result is.
    """
    if m_res.r == 0 or _is_fixed(m_res):
        return m_res
    current = m_res
    for step in mn_schedule(m_res.r):
        current = antiflip_step(current, step.direction, step.index, validate=False).resolution
    contracts_to(current)
    return current


def replay_to_m_resolution(n_res: WahlResolution) -> WahlResolution:
    """Walk the inverse schedule back to the M-resolution.

    Every step that turns a K-negative curve K-positive must lower one of the
    two indices around it without raising the other.
    """
    if n_res.r == 0 or _is_fixed(n_res):
        return n_res
    current = n_res
    word = mn_schedule(n_res.r).inverse()
    for position, step in enumerate(word, start=1):
        result = antiflip_step(current, step.direction, step.index, validate=False)
        if flip_is_monotone(current, result) is False:
            raise InvariantViolation(
                f"step {position} ({step}) did not lower the indices around curve {step.index}: "
                f"{print_chain(current)} -> {print_chain(result.resolution)}"
            )
        current = result.resolution
    contracts_to(current)
    return current


@dataclass(frozen=True, slots=True)
class BraidCheckResult:
    """Outcome of one braid relation check; ``vacuous`` when some antiflip was undefined."""

    holds: bool
    vacuous: bool = False
    reason: str = ""

    def __bool__(self) -> bool:
        return self.holds


def _relation_words(i: int, j: int) -> tuple[BraidWord, BraidWord]:
    R_i = BraidGenerator(Direction.RIGHT, i)
    R_j = BraidGenerator(Direction.RIGHT, j)
    if abs(i - j) == 1:
        return BraidWord((R_i, R_j, R_i)), BraidWord((R_j, R_i, R_j))
    return BraidWord((R_i, R_j)), BraidWord((R_j, R_i))


def check_braid_relations(W: WahlResolution, i: int, j: int) -> BraidCheckResult:
    """R_i R_j R_i = R_j R_i R_j for adjacent curves, R_i R_j = R_j R_i for distant ones."""
    if i == j or not (1 <= i <= W.r and 1 <= j <= W.r):
        return BraidCheckResult(True, vacuous=True, reason=f"no relation between R{i} and R{j} for r = {W.r}")
    lhs, rhs = _relation_words(i, j)
    try:
        left = apply_word(W, lhs)
        right = apply_word(W, rhs)
    except ResolutionError as exc:
        logger.debug("Braid relation for (%s, %s) undefined on %s: %s", i, j, print_chain(W), exc)
        return BraidCheckResult(True, vacuous=True, reason=f"{type(exc).__name__}: {exc}")
    if left != right:
        return BraidCheckResult(False, reason=f"{lhs} gives {print_chain(left)} but {rhs} gives {print_chain(right)}")
    return BraidCheckResult(True)


__all__ = [
    "trace_word",
    "apply_word",
    "n_resolution_of",
    "replay_to_m_resolution",
    "BraidCheckResult",
    "check_braid_relations",
]
