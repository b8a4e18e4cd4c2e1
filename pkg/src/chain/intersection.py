"""Toric intersection theory on Wahl resolutions.

Discrepancies come from the adjunction system on each minimal-resolution
chain. The chain of P_i is read from Gamma_i towards Gamma_{i+1}, so a curve
meets the LAST exceptional curve of its left point and the FIRST exceptional
curve of its right point.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Union

from src.cfrac import CqsFraction, WahlSingularity, hj_expand, wahl_cf
from src.errors import NoSuchCurve, NonIntegral

from .chain_models import DiscrepancyProfile, WahlResolution


def _solve_adjunction(chain: tuple[int, ...]) -> tuple[Fraction, ...]:
    # tridiagonal system d_{k-1} - e_k d_k + d_{k+1} = e_k - 2
    size = len(chain)
    if size == 0:
        return ()
    upper: list[Fraction] = []
    rhs: list[Fraction] = []
    for k, e in enumerate(chain):
        pivot = Fraction(-e) - (upper[k - 1] if k else 0)
        value = Fraction(e - 2) - (rhs[k - 1] if k else 0)
        upper.append(Fraction(1) / pivot)
        rhs.append(value / pivot)
    solution = [Fraction(0)] * size
    solution[-1] = rhs[-1]
    for k in range(size - 2, -1, -1):
        solution[k] = rhs[k] - upper[k] * solution[k + 1]
    return tuple(solution)


@lru_cache(maxsize=8192)
def _profile_for_wahl(w: WahlSingularity) -> DiscrepancyProfile:
    chain = wahl_cf(w)
    return DiscrepancyProfile(chain, _solve_adjunction(chain))


def discrepancies(point: Union[WahlSingularity, CqsFraction]) -> DiscrepancyProfile:
    """Discrepancy of every exceptional curve of the minimal resolution."""
    if isinstance(point, WahlSingularity):
        if point.is_smooth:
            return DiscrepancyProfile((), ())
        return _profile_for_wahl(point)
    if point.is_smooth:
        return DiscrepancyProfile((), ())
    chain = hj_expand(point)
    return DiscrepancyProfile(chain, _solve_adjunction(chain))


def k_dot_gamma(left: WahlSingularity, c: int, right: WahlSingularity) -> Fraction:
    """K . Gamma for a curve of self-intersection -c joining ``left`` and ``right``."""
    return Fraction(c - 2) - discrepancies(left).last - discrepancies(right).first


def toric_k_dot_gamma(left: WahlSingularity, c: int, right: WahlSingularity) -> Fraction:
    """Closed form (c - 1) + a_L/n_L - a_R/n_R of the same number."""
    return Fraction(c - 1) + Fraction(left.left_a, left.n) - Fraction(right.right_a, right.n)


def signed_invariant(left: WahlSingularity, c: int, right: WahlSingularity) -> int:
    """n_L n_R K.Gamma in integer arithmetic."""
    return left.n * right.n * (c - 1) + left.left_a * right.n - right.right_a * left.n


def delta_signed(W: WahlResolution, i: int) -> int:
    """s_i = n_{i-1} n_i K.Gamma_i; the delta-invariant is its absolute value."""
    if not 1 <= i <= W.r:
        raise IndexError(f"curve index {i} outside 1..{W.r}")
    left, right = W.sings[i - 1], W.sings[i]
    value = k_dot_gamma(left, W.curves[i - 1], right) * left.n * right.n
    if value.denominator != 1:
        raise NonIntegral(f"n_L n_R K.Gamma_{i} = {value} on {W.sings[i - 1]}-({W.curves[i - 1]})-{W.sings[i]}")
    return value.numerator


def signed_deltas(W: WahlResolution) -> tuple[int, ...]:
    return tuple(delta_signed(W, i) for i in range(1, W.r + 1))


def curve_from_delta(left: WahlSingularity, right: WahlSingularity, s: int) -> int:
    """The unique c >= 1 with n_L n_R K.Gamma = s."""
    c = Fraction(2) + discrepancies(left).last + discrepancies(right).first + Fraction(s, left.n * right.n)
    if c.denominator != 1 or c < 1:
        raise NoSuchCurve(f"no curve joins {left} and {right} with signed invariant {s} (c = {c})")
    return c.numerator


def extremal_delta_identity(W: WahlResolution) -> bool:
    """For one curve: delta = n_0^2 + n_1^2 + s_1 n_0 n_1."""
    if W.r != 1:
        raise ValueError("the identity concerns resolutions with a single curve")
    n0, n1 = W.sings[0].n, W.sings[1].n
    return W.target.delta == n0 * n0 + n1 * n1 + delta_signed(W, 1) * n0 * n1


__all__ = [
    "discrepancies",
    "k_dot_gamma",
    "toric_k_dot_gamma",
    "signed_invariant",
    "delta_signed",
    "signed_deltas",
    "curve_from_delta",
    "extremal_delta_identity",
]
