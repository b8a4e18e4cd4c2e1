"""Data models for quivers, Q_{a,b,c} witnesses and the Dolgachev report."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from src.cfrac import CqsFraction
from src.chain import WahlResolution

Matrix = Tuple[Tuple[int, ...], ...]


@dataclass(frozen=True, slots=True)
class Quiver:
    """Quiver of the strong exceptional collection of an N-resolution.

    Vertex i is the bundle E_i attached to the point P_i of the N-resolution, so
    ``ranks[i]`` is n_i. ``hom[i][j]`` and ``arrows[i][j]`` are only nonzero for
    i > j; arrows run from the higher index to the lower one.
    """

    ranks: Tuple[int, ...]
    hom: Matrix
    arrows: Matrix

    @property
    def size(self) -> int:
        return len(self.ranks)

    @property
    def is_semisimple(self) -> bool:
        return all(value == 0 for row in self.hom for value in row)

    def edges(self) -> List[Tuple[int, int, int]]:
        """(source, target, multiplicity) for every nonzero arrow count, highest source first."""
        return [
            (i, j, self.arrows[i][j])
            for i in range(self.size - 1, -1, -1)
            for j in range(i - 1, -1, -1)
            if self.arrows[i][j]
        ]

    def hom_entries(self) -> List[Tuple[int, int, int]]:
        return [
            (i, j, self.hom[i][j])
            for i in range(self.size - 1, -1, -1)
            for j in range(i - 1, -1, -1)
            if self.hom[i][j]
        ]

    def is_connected(self) -> bool:
        parent = list(range(self.size))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for source, target, _ in self.edges():
            parent[find(source)] = find(target)
        return len({find(v) for v in range(self.size)}) <= 1

    def to_dict(self) -> Dict[str, object]:
        return {
            "ranks": list(self.ranks),
            "hom": [list(row) for row in self.hom],
            "arrows": [list(row) for row in self.arrows],
        }


@dataclass(frozen=True, slots=True)
class ExtremalWitness:
    """An extremal resolution realizing Q_{a,b,c}.

    ``epsilon_a`` / ``epsilon_b`` are None for index 1 (a smooth point). The
    degenerate cases with a = 0 or b = 0 carry no chain.
    """

    a: int
    b: int
    c: int
    lam: Optional[int] = None
    epsilon_a: Optional[int] = None
    epsilon_b: Optional[int] = None
    chain: Optional[WahlResolution] = None


@dataclass(frozen=True, slots=True)
class DolgachevReport:
    """Combinatorial data of the Dolgachev degeneration for (p, q)."""

    p: int
    q: int
    target: CqsFraction
    delta: Tuple[int, ...]
    m_res: WahlResolution
    n_res: WahlResolution
    quiver: Quiver
    predicted_fractions: Optional[Tuple[Tuple[int, int], ...]]
    gram_matrix: Tuple[Tuple[int, int], Tuple[int, int]]
    provenance: Dict[str, str] = field(default_factory=dict)

    @property
    def full_collection(self) -> bool:
        """Quoted: the collection is full exactly for (p, q) = (3, 2)."""
        return (self.p, self.q) == (3, 2)


__all__ = [
    "Matrix",
    "Quiver",
    "ExtremalWitness",
    "DolgachevReport",
]
