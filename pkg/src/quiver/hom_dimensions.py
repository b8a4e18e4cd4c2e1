"""Hom dimensions, arrow multiplicities, Euler pairings and the rank identity."""

from __future__ import annotations

import logging
from fractions import Fraction
from typing import List, Sequence

from src.chain import WahlResolution, delta_signed
from src.errors import FormulaMismatch, NegativeArrowCount

from .quiver_models import Matrix, Quiver

logger = logging.getLogger(__name__)


def _freeze(rows: List[List[int]]) -> Matrix:
    return tuple(tuple(row) for row in rows)


def hom_matrix(n_res: WahlResolution) -> Matrix:
    """hom(E_i, E_j) = n_j a_i - n_i a_j for i > j, checked against the delta-sum form."""
    size = n_res.r + 1
    ranks = n_res.indices
    deltas = [0] + [-delta_signed(n_res, k) for k in range(1, size)]
    hom = [[0] * size for _ in range(size)]
    for i in range(size):
        a_i = n_res.sings[i].right_a
        running = Fraction(0)
        for j in range(i - 1, -1, -1):
            a_j = n_res.sings[j].right_a
            closed = ranks[j] * a_i - ranks[i] * a_j
            running += Fraction(deltas[j + 1], ranks[j] * ranks[j + 1])
            summed = running * ranks[i] * ranks[j]
            if summed != closed:
                raise FormulaMismatch(f"hom(E_{i}, E_{j}): closed form {closed} but delta sum {summed}")
            if closed < 0:
                raise FormulaMismatch(f"hom(E_{i}, E_{j}) = {closed} is negative")
            hom[i][j] = closed
    return _freeze(hom)


def arrows_from_homs(hom: Sequence[Sequence[int]]) -> Matrix:
    """A[i][j] = H[i][j] - sum_{i > k > j} A[i][k] H[k][j]."""
    size = len(hom)
    arrows = [[0] * size for _ in range(size)]
    for i in range(size):
        for j in range(i - 1, -1, -1):
            value = hom[i][j] - sum(arrows[i][k] * hom[k][j] for k in range(j + 1, i))
            if value < 0:
                raise NegativeArrowCount(f"arrow count {value} from E_{i} to E_{j}")
            arrows[i][j] = value
    return _freeze(arrows)


def path_count_matrix(arrows: Sequence[Sequence[int]]) -> Matrix:
    """sum_{k >= 1} A^k; A is strictly lower triangular, hence nilpotent."""
    size = len(arrows)
    total = [[0] * size for _ in range(size)]
    power = [list(row) for row in arrows]
    while any(any(row) for row in power):
        for i in range(size):
            for j in range(size):
                total[i][j] += power[i][j]
        power = [
            [sum(power[i][k] * arrows[k][j] for k in range(size)) for j in range(size)] for i in range(size)
        ]
    return _freeze(total)


def hom_dims(n_res: WahlResolution) -> Quiver:
    """Ranks, hom dimensions and arrows of the collection attached to an N-resolution."""
    hom = hom_matrix(n_res)
    quiver = Quiver(ranks=n_res.indices, hom=hom, arrows=arrows_from_homs(hom))
    logger.debug("Quiver with ranks %s and %s arrows", quiver.ranks, sum(m for _, _, m in quiver.edges()))
    return quiver


def euler_pairing(W: WahlResolution, i: int) -> int:
    """chi(E_i, E_{i-1}) = -n_{i-1} n_i K.Gamma_i."""
    return -delta_signed(W, i)


def rank_identity(m_res: WahlResolution, n_res: WahlResolution) -> bool:
    """delta = sum_i n_i nbar_{r-i}."""
    if m_res.r != n_res.r:
        return False
    r = m_res.r
    total = sum(m_res.sings[i].n * n_res.sings[r - i].n for i in range(r + 1))
    return total == m_res.target.delta


__all__ = [
    "hom_matrix",
    "arrows_from_homs",
    "path_count_matrix",
    "hom_dims",
    "euler_pairing",
    "rank_identity",
]
