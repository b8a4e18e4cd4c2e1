"""Telemetry for component builds, antiflips and sweeps."""

from .telemetry_service import TelemetryService

__all__ = ["TelemetryService"]
