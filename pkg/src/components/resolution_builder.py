"""Construction of the M-resolution, delta-vector and N-resolution of a component."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from math import gcd
from typing import Iterator, List, Optional, Tuple

from src.cfrac import CqsFraction, WahlSingularity, blow_down, format_hj, hj_eval, hj_expand, is_canonical
from src.chain import (
    WahlResolution,
    chain_string,
    contract_string,
    contracts_to,
    curve_from_delta,
    delta_signed,
    partial_contraction,
    print_chain,
    signed_invariant,
)
from src.errors import ConstructionFailed, NotContractible, ResolutionError

from .zero_fractions import ZeroFraction

logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class DeltaVector:
    """delta_1..delta_r of an M-resolution.

    ``epsilons`` holds the denominator partner at the positions closing a
    group and None elsewhere.
    """

    values: Tuple[int, ...]
    epsilons: Tuple[Optional[int], ...]

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __str__(self) -> str:
        return "(" + ",".join(str(v) for v in self.values) + ")"


def _point_from_prefix(prefix, f: CqsFraction, z: ZeroFraction) -> WahlSingularity:
    # n/(n - a) is the value of the prefix; the empty prefix is a smooth point
    if not prefix:
        return WahlSingularity.smooth()
    if not is_canonical(prefix):
        raise ConstructionFailed(f"prefix {format_hj(prefix)} of {z} for {f} is not canonical")
    p, q = hj_eval(prefix)
    try:
        return WahlSingularity(p, p - q)
    except ValueError as exc:
        raise ConstructionFailed(f"prefix {format_hj(prefix)} of {z} is not Wahl data") from exc


def delta_vector(z: ZeroFraction) -> DeltaVector:
    """delta at position d_{i_1} + ... + d_{i_k} is the numerator of [b_{i_k + 1}, ..., b_{i_{k+1} - 1}]."""
    d = z.d
    groups = z.group_indices
    values = [0] * z.r
    epsilons: List[Optional[int]] = [None] * z.r
    position = 0
    for k in range(len(groups) - 1):
        position += d[groups[k]]
        delta, epsilon = hj_eval(z.b[groups[k] + 1 : groups[k + 1]])
        values[position - 1] = delta
        epsilons[position - 1] = epsilon
    return DeltaVector(tuple(values), tuple(epsilons))


def m_resolution(f: CqsFraction, z: ZeroFraction) -> WahlResolution:
    """Group k holds d_{i_k} copies of the Wahl point read off the blown-down prefix k_1..k_{i_k - 1}."""
    d = z.d
    sings: List[WahlSingularity] = []
    for index in z.group_indices:
        point = _point_from_prefix(blow_down(z.k[:index]), f, z)
        sings.extend([point] * d[index])
    deltas = delta_vector(z)
    try:
        curves = [curve_from_delta(sings[i - 1], sings[i], deltas.values[i - 1]) for i in range(1, len(sings))]
        W = WahlResolution.build(f, sings, curves)
        contracts_to(W)
    except ResolutionError as exc:
        raise ConstructionFailed(f"M-resolution of {f} for {z}: {exc}") from exc
    logger.debug("M-resolution of %s for %s: %s", f, z, print_chain(W))
    return W


def n_resolution(f: CqsFraction, z: ZeroFraction, *, m_res: Optional[WahlResolution] = None) -> WahlResolution:
    """Points read bottom-up from the unmodified prefixes b_1..b_{i_k - 1}, then reversed."""
    d = z.d
    bottom_up: List[WahlSingularity] = []
    for index in z.group_indices:
        point = _point_from_prefix(z.b[:index], f, z)
        bottom_up.extend([point] * d[index])
    sings = list(reversed(bottom_up))
    curves = [
        1 if not (sings[i - 1].is_smooth and sings[i].is_smooth) else 2 for i in range(1, len(sings))
    ]
    W = WahlResolution.build(f, sings, curves)
    m_res = m_res or m_resolution(f, z)
    deltas = delta_vector(z).values
    r = W.r
    try:
        contracts_to(W)
        for i in range(1, r + 1):
            if delta_signed(W, r - i + 1) != -deltas[i - 1]:
                raise ConstructionFailed(
                    f"N-resolution curve {r - i + 1} has signed invariant {delta_signed(W, r - i + 1)}, "
                    f"expected {-deltas[i - 1]}"
                )
            if partial_contraction(m_res, 0, i) != partial_contraction(W, r - i, r):
                raise ConstructionFailed(f"partial contractions of length {i} differ")
    except ConstructionFailed as exc:
        exc.add_note(f"N-resolution candidate {print_chain(W)} for {z}")
        raise
    except ResolutionError as exc:
        raise ConstructionFailed(f"N-resolution of {f} for {z}: {exc}") from exc
    logger.debug("N-resolution of %s for %s: %s", f, z, print_chain(W))
    return W


def _top_candidates(target: CqsFraction, below: CqsFraction) -> Iterator[Tuple[WahlSingularity, int]]:
    # [P]-(c)-[below] evaluates to target: for a Wahl point c = 1 and
    # n^2 omega - (n a - 1) delta = delta_below, so n divides delta - delta_below
    gap = target.delta - below.delta
    for n in range(2, gap + 1):
        if gap % n:
            continue
        numerator = n * target.omega + gap // n
        if numerator % target.delta:
            continue
        a = numerator // target.delta
        if 0 < a < n and gcd(n, a) == 1:
            yield WahlSingularity(n, a), 1
    if target.omega == below.delta and (target.delta + below.omega) % below.delta == 0:
        yield WahlSingularity.smooth(), (target.delta + below.omega) // below.delta


def rebuild_n_resolution(m_res: WahlResolution) -> WahlResolution:
    """Rebuild the N-resolution from the M-resolution alone.

    The sub-chain P_0..P_{k-1} of M contracts to a singularity whose
    N-resolution is known by induction; the N-resolution for P_0..P_k adds one
    point on top, the only one whose chain contracts to the next partial
    contraction of M with a K-non-positive new curve.
    """
    sings = [m_res.sings[0]]
    curves: List[int] = []
    below = partial_contraction(m_res, 0, 0)
    for k in range(1, m_res.r + 1):
        target = partial_contraction(m_res, 0, k)
        for point, c in _top_candidates(target, below):
            if signed_invariant(point, c, sings[0]) > 0:
                continue
            try:
                if contract_string(chain_string([point, *sings], [c, *curves])) == target:
                    break
            except NotContractible:
                continue
        else:
            raise ConstructionFailed(
                f"no point on top of {print_chain(WahlResolution.build(below, sings, curves))} contracts to {target}"
            )
        sings.insert(0, point)
        curves.insert(0, c)
        below = target
    W = WahlResolution.build(m_res.target, sings, curves)
    logger.debug("Rebuilt N-resolution of %s: %s", print_chain(m_res), print_chain(W))
    return W


def component_dimension(m: WahlResolution) -> int:
    """sum (c_i - 1) + number of non-smooth points."""
    return sum(c - 1 for c in m.curves) + m.non_smooth_count()


def artin_group_sizes(f: CqsFraction) -> Tuple[int, ...]:
    """y_k + 1 for delta/omega = [2^{y_1}, x_1, 2^{y_2}, ..., x_{e-1}, 2^{y_e}]."""
    sizes = [1]
    for entry in hj_expand(f):
        if entry == 2:
            sizes[-1] += 1
        else:
            sizes.append(1)
    return tuple(sizes)


__all__ = [
    "DeltaVector",
    "delta_vector",
    "m_resolution",
    "n_resolution",
    "rebuild_n_resolution",
    "component_dimension",
    "artin_group_sizes",
]
