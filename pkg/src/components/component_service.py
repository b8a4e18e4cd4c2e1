"""Service assembling a validated report for every deformation component."""

from __future__ import annotations

import logging
import time
from dataclasses import dataclass
from typing import List, Optional

from src.cfrac import CqsFraction
from src.chain import WahlResolution
from src.errors import InvariantViolation, ResolutionError
from src.observability.telemetry_service import TelemetryService
from src.quiver.hom_dimensions import hom_dims
from src.quiver.quiver_models import Quiver

from .resolution_builder import DeltaVector, component_dimension, delta_vector, m_resolution, n_resolution
from .zero_fractions import ZeroFraction, enumerate_zero_fractions


@dataclass(frozen=True, slots=True)
class ComponentReport:
    """Everything attached to one deformation component."""

    target: CqsFraction
    zero_fraction: ZeroFraction
    dimension: int
    delta: DeltaVector
    m_res: WahlResolution
    n_res: WahlResolution
    quiver: Quiver

    @property
    def is_artin(self) -> bool:
        return self.m_res.is_minimal_resolution


class ComponentService:
    """Enumerate components of 1/delta(1, omega) and build their reports."""

    def __init__(
        self,
        *,
        telemetry_service: Optional[TelemetryService] = None,
        logger: Optional[logging.Logger] = None,
    ) -> None:
        self._telemetry = telemetry_service
        self._logger = logger or logging.getLogger(self.__class__.__name__)

    def zero_fractions(self, f: CqsFraction) -> List[ZeroFraction]:
        return enumerate_zero_fractions(f)

    def build_report(self, f: CqsFraction, z: ZeroFraction) -> ComponentReport:
        """Build and validate the M/N pair of one component."""
        started = time.perf_counter()
        span = None
        if self._telemetry:
            span = self._telemetry.start_activity("build_component", {"target": str(f), "zero_fraction": str(z)})
        try:
            m_res = m_resolution(f, z)
            n_res = n_resolution(f, z, m_res=m_res)
            report = ComponentReport(
                target=f,
                zero_fraction=z,
                dimension=component_dimension(m_res),
                delta=delta_vector(z),
                m_res=m_res,
                n_res=n_res,
                quiver=hom_dims(n_res),
            )
        except ResolutionError as exc:
            if self._telemetry:
                self._telemetry.record_error("components", type(exc).__name__, str(exc))
            raise
        finally:
            if span is not None:
                span.end()
        if self._telemetry:
            self._telemetry.record_component_build(str(f), time.perf_counter() - started, m_res.r)
        return report

    def components(self, f: CqsFraction) -> List[ComponentReport]:
        """One validated report per zero fraction, in lexicographic order."""
        self._logger.info("Building components of %s", f)
        reports = []
        for z in self.zero_fractions(f):
            try:
                reports.append(self.build_report(f, z))
            except ResolutionError as exc:
                exc.add_note(f"while building the component of {f} with zero fraction {z}")
                raise
        artin = [report for report in reports if report.is_artin]
        if len(artin) != 1:
            raise InvariantViolation(f"{f} has {len(artin)} components whose M-resolution is minimal")
        self._logger.info("Built %s components of %s", len(reports), f)
        return reports


def components(f: CqsFraction) -> List[ComponentReport]:
    return ComponentService().components(f)


__all__ = [
    "ComponentReport",
    "ComponentService",
    "components",
]
