"""Which triangle quivers Q_{a,b,c} come from N-resolutions.

Q_{a,b,c} is realizable exactly when an extremal resolution with Wahl points of
indices a and b and delta = c exists. Candidates are built from lambda >= 2 and
residues epsilon coprime to the indices, then validated by contraction.
"""

from __future__ import annotations

import logging
from math import gcd
from typing import Dict, Iterator, List, Optional, Tuple

from src.cfrac import WahlSingularity
from src.chain import WahlResolution, chain_string, contract_string, delta_signed
from src.errors import InvalidParameters, ResolutionError

from .quiver_models import ExtremalWitness

logger = logging.getLogger(__name__)


def _residues(x: int) -> List[Optional[int]]:
    if x == 1:
        return [None]
    return [e for e in range(1, x) if gcd(e, x) == 1]


def predicted_c(a: int, b: int, lam: int, epsilon_a: Optional[int], epsilon_b: Optional[int]) -> int:
    """c as a function of (lambda, epsilon_a, epsilon_b) in the three index cases."""
    if a == 1 and b == 1:
        return lam - 1
    if b == 1:
        return (lam - 1) * a - epsilon_a
    if a == 1:
        return (lam - 1) * b - epsilon_b
    return (lam - 1) * a * b - epsilon_a * b - epsilon_b * a


def _candidate_chain(
    a: int, b: int, lam: int, epsilon_a: Optional[int], epsilon_b: Optional[int]
) -> Tuple[List[WahlSingularity], int]:
    left = WahlSingularity.smooth() if a == 1 else WahlSingularity(a, a - epsilon_a)
    right = WahlSingularity.smooth() if b == 1 else WahlSingularity(b, epsilon_b)
    if a == 1 and b == 1:
        curve = lam + 1
    elif a == 1 or b == 1:
        curve = lam
    else:
        curve = lam - 1
    return [left, right], curve


def _witness(a: int, b: int, lam: int, epsilon_a: Optional[int], epsilon_b: Optional[int]) -> Optional[ExtremalWitness]:
    c = predicted_c(a, b, lam, epsilon_a, epsilon_b)
    if c <= 0:
        return None
    sings, curve = _candidate_chain(a, b, lam, epsilon_a, epsilon_b)
    try:
        target = contract_string(chain_string(sings, [curve]))
        if target.is_smooth:
            return None
        chain = WahlResolution.build(target, sings, [curve])
        if delta_signed(chain, 1) != c:
            logger.warning("Candidate %s has signed invariant %s, expected %s", sings, delta_signed(chain, 1), c)
            return None
    except ResolutionError:
        return None
    return ExtremalWitness(a=a, b=b, c=c, lam=lam, epsilon_a=epsilon_a, epsilon_b=epsilon_b, chain=chain)


def _candidates(a: int, b: int, lam_max: int) -> Iterator[ExtremalWitness]:
    for lam in range(2, lam_max + 1):
        for epsilon_a in _residues(a):
            for epsilon_b in _residues(b):
                witness = _witness(a, b, lam, epsilon_a, epsilon_b)
                if witness is not None:
                    yield witness


def check_Q_abc(a: int, b: int, c: int) -> Optional[ExtremalWitness]:
    """A witness that Q_{a,b,c} is the quiver of some N-resolution, or None."""
    if a < 0 or b < 0 or c < 0:
        raise InvalidParameters(f"Q_{{a,b,c}} needs nonnegative parameters, got ({a}, {b}, {c})")
    if a == 0 or b == 0:
        # a vanishing index forces c to equal the other one
        if (a == 0 and b == 0 and c == 0) or (a == 0 and b > 0 and c == b) or (b == 0 and a > 0 and c == a):
            return ExtremalWitness(a=a, b=b, c=c)
        return None
    if c == 0:
        return None
    for witness in _candidates(a, b, c + 3):
        if witness.c == c:
            return witness
    return None


def enumerate_c(a: int, b: int, c_max: int) -> Dict[int, ExtremalWitness]:
    """Every realizable c <= c_max with its first witness."""
    if a < 1 or b < 1:
        raise InvalidParameters(f"enumerate_c needs indices >= 1, got ({a}, {b})")
    found: Dict[int, ExtremalWitness] = {}
    for witness in _candidates(a, b, c_max + 3):
        if witness.c <= c_max and witness.c not in found:
            found[witness.c] = witness
    return dict(sorted(found.items()))


__all__ = [
    "predicted_c",
    "check_Q_abc",
    "enumerate_c",
]
