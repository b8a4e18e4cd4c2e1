"""Data models for Wahl resolutions."""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Sequence, Tuple

from src.cfrac import CqsFraction, HJString, WahlSingularity


@dataclass(frozen=True, slots=True)
class WahlResolution:
    """Chain P_0 -(c_1)- P_1 - ... -(c_r)- P_r contracting to ``target``.

    ``curves[i - 1]`` is c_i, the negated self-intersection of the proper
    transform of Gamma_i in the minimal resolution. Signed invariants are always
    derived from the curves, never stored.
    """

    target: CqsFraction
    sings: Tuple[WahlSingularity, ...]
    curves: Tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.sings:
            raise ValueError("a resolution needs at least one singular point")
        if len(self.curves) != len(self.sings) - 1:
            raise ValueError(
                f"{len(self.sings)} points need {len(self.sings) - 1} curves, got {len(self.curves)}"
            )
        if any(c < 1 for c in self.curves):
            raise ValueError(f"curve self-intersections must be <= -1, got {self.curves}")

    @classmethod
    def build(
        cls, target: CqsFraction, sings: Sequence[WahlSingularity], curves: Sequence[int]
    ) -> "WahlResolution":
        return cls(target, tuple(sings), tuple(curves))

    @property
    def r(self) -> int:
        return len(self.curves)

    @property
    def indices(self) -> Tuple[int, ...]:
        return tuple(w.n for w in self.sings)

    @property
    def is_minimal_resolution(self) -> bool:
        return all(w.is_smooth for w in self.sings)

    def non_smooth_count(self) -> int:
        return sum(1 for w in self.sings if not w.is_smooth)

    def with_chain(self, sings: Sequence[WahlSingularity], curves: Sequence[int]) -> "WahlResolution":
        return replace(self, sings=tuple(sings), curves=tuple(curves))

    def reversed(self) -> "WahlResolution":
        """Mirror image; it contracts to delta/omega' with omega * omega' = 1 mod delta."""
        mirrored = tuple(
            w if w.is_smooth else WahlSingularity(w.n, w.n - w.a) for w in reversed(self.sings)
        )
        target = self.target
        if not target.is_smooth:
            target = CqsFraction(target.delta, pow(target.omega, -1, target.delta))
        return WahlResolution(target, mirrored, tuple(reversed(self.curves)))


@dataclass(frozen=True, slots=True)
class DiscrepancyProfile:
    """Discrepancies of the exceptional curves of one minimal-resolution chain."""

    chain: HJString
    values: Tuple[Fraction, ...]

    @property
    def first(self) -> Fraction:
        return self.values[0] if self.values else Fraction(0)

    @property
    def last(self) -> Fraction:
        return self.values[-1] if self.values else Fraction(0)

    @property
    def is_du_val(self) -> bool:
        return all(v == 0 for v in self.values)


__all__ = [
    "WahlResolution",
    "DiscrepancyProfile",
]
