"""Contraction of Wahl resolutions back to their cyclic quotient singularity."""

from __future__ import annotations

from typing import Sequence

from src.cfrac import CqsFraction, HJString, WahlSingularity, blow_down, hj_eval, is_canonical, parse_T, wahl_cf
from src.errors import NotContractible

from .chain_models import WahlResolution
from .intersection import curve_from_delta, delta_signed


def chain_string(sings: Sequence[WahlSingularity], curves: Sequence[int]) -> HJString:
    entries: list[int] = []
    for index, point in enumerate(sings):
        if index:
            entries.append(curves[index - 1])
        if not point.is_smooth:
            entries.extend(wahl_cf(point))
    return tuple(entries)


def full_string(W: WahlResolution) -> HJString:
    """wahl_cf(P_0), c_1, wahl_cf(P_1), ..., c_r, wahl_cf(P_r)."""
    return chain_string(W.sings, W.curves)


def contract_string(entries: Sequence[int]) -> CqsFraction:
    """Blow down and read off the singularity; the empty result is smooth."""
    contracted = blow_down(entries)
    if not contracted:
        return CqsFraction.smooth()
    if not is_canonical(contracted):
        raise NotContractible(f"{list(entries)} blows down to {list(contracted)}")
    p, q = hj_eval(contracted)
    return CqsFraction(p, q)


def contracts_to(W: WahlResolution) -> CqsFraction:
    """Contract W and check the result against its target."""
    result = contract_string(full_string(W))
    if result != W.target:
        raise NotContractible(f"chain contracts to {result}, expected {W.target}")
    return result


def partial_contraction(W: WahlResolution, i: int, j: int) -> CqsFraction:
    """Contract P_i, c_{i+1}, ..., P_j."""
    if not 0 <= i <= j <= W.r:
        raise IndexError(f"sub-chain {i}..{j} outside 0..{W.r}")
    return contract_string(chain_string(W.sings[i : j + 1], W.curves[i:j]))


def validate(W: WahlResolution) -> WahlResolution:
    contracts_to(W)
    for index in range(1, W.r + 1):
        delta_signed(W, index)
    return W


def crepant_resolution(f: CqsFraction) -> WahlResolution:
    """The Wahl resolution of a T-singularity: d copies of (n, a) on crepant curves."""
    params = parse_T(f)
    if params is None:
        raise NotContractible(f"{f} is not a T-singularity")
    point = params.wahl
    curve = curve_from_delta(point, point, 0)
    W = WahlResolution.build(f, [point] * params.d, [curve] * (params.d - 1))
    contracts_to(W)
    return W


__all__ = [
    "chain_string",
    "full_string",
    "contract_string",
    "contracts_to",
    "partial_contraction",
    "validate",
    "crepant_resolution",
]
