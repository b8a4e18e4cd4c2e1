"""Service for configuring and managing telemetry using OpenTelemetry."""

import logging
import sys
from typing import Any, Dict, Optional

from opentelemetry import metrics, trace
from opentelemetry.sdk.metrics import MeterProvider
from opentelemetry.sdk.metrics.export import ConsoleMetricExporter, PeriodicExportingMetricReader
from opentelemetry.sdk.resources import SERVICE_NAME, SERVICE_VERSION, Resource
from opentelemetry.sdk.trace import TracerProvider
from opentelemetry.sdk.trace.export import BatchSpanProcessor, ConsoleSpanExporter

from config import Settings


class TelemetryService:
    """
    Spans and counters for component construction, antiflips and sweeps.
    Every record_* call is a no-op until initialize() has enabled telemetry.
    """

    def __init__(self, settings: Settings, logger: Optional[logging.Logger] = None):
        """Initialize the telemetry service."""
        self._settings = settings
        self._logger = logger or logging.getLogger(__name__)

        # OpenTelemetry providers
        self._tracer_provider: Optional[TracerProvider] = None
        self._meter_provider: Optional[MeterProvider] = None

        # Tracer and Meter
        self._tracer = None
        self._meter = None

        # Custom metrics
        self._component_counter = None
        self._component_histogram = None
        self._antiflip_counter = None
        self._sweep_pair_counter = None
        self._error_counter = None

    @property
    def enabled(self) -> bool:
        return self._tracer is not None

    def initialize(self) -> None:
        """Initialize OpenTelemetry providers based on configuration."""
        observability_config = self._settings.observability

        if not observability_config.enable_telemetry:
            self._logger.debug("Telemetry disabled by configuration")
            return

        try:
            self._initialize_tracing(observability_config.service_name, observability_config.service_version)
            self._initialize_metrics(observability_config.service_name, observability_config.service_version)
            self._logger.info("Telemetry service initialized")
        except Exception as ex:
            self._logger.error("Failed to initialize telemetry service: %s", ex, exc_info=ex)
            raise

    def record_component_build(self, target: str, duration_seconds: float, curves: int) -> None:
        """Record one validated component report."""
        if not self._component_counter or not self._component_histogram:
            return

        tags = {"target": target, "curves": str(curves)}
        self._component_counter.add(1, tags)
        self._component_histogram.record(duration_seconds, tags)

        self._logger.debug("Recorded component build for %s in %.4fs", target, duration_seconds)

    def record_antiflip(self, direction: str, case: str) -> None:
        """Record one antiflip by direction (R/L) and sign case."""
        if not self._antiflip_counter:
            return

        self._antiflip_counter.add(1, {"direction": direction, "case": case})

    def record_sweep_pair(self, target: str, components: int, failures: int) -> None:
        """Record one (delta, omega) pair checked by the sweep."""
        if not self._sweep_pair_counter:
            return

        self._sweep_pair_counter.add(1, {"failed": str(failures > 0).lower()})
        self._logger.debug("Recorded sweep pair %s: %s components, %s failures", target, components, failures)

    def record_error(
        self,
        component: str,
        error_type: str,
        error_message: Optional[str] = None,
        tags: Optional[Dict[str, Any]] = None,
    ) -> None:
        """Record an error event."""
        if not self._error_counter:
            return

        base_tags = {"component": component, "error_type": error_type}

        if error_message:
            base_tags["error_message"] = error_message[:100]  # Truncate long messages

        if tags:
            for key, value in tags.items():
                base_tags[key] = str(value) if value is not None else "null"

        self._error_counter.add(1, base_tags)

        self._logger.debug("Recorded error: %s, Type: %s, Message: %s", component, error_type, error_message)

    def start_activity(self, name: str, tags: Optional[Dict[str, Any]] = None):
        """Create a new span, or None while telemetry is disabled."""
        if not self._tracer:
            return None

        span = self._tracer.start_span(name)

        if tags:
            for key, value in tags.items():
                span.set_attribute(key, str(value) if value is not None else "null")

        return span

    def _initialize_tracing(self, service_name: str, service_version: str) -> None:
        """Initialize distributed tracing."""
        resource = Resource.create({SERVICE_NAME: service_name, SERVICE_VERSION: service_version})

        self._tracer_provider = TracerProvider(resource=resource)
        trace.set_tracer_provider(self._tracer_provider)

        # stdout carries report output, so spans go to stderr
        if self._settings.observability.console_exporter_enabled:
            self._tracer_provider.add_span_processor(BatchSpanProcessor(ConsoleSpanExporter(out=sys.stderr)))

        self._tracer = trace.get_tracer("cqsres", service_version)

    def _initialize_metrics(self, service_name: str, service_version: str) -> None:
        """Initialize metrics collection."""
        resource = Resource.create({SERVICE_NAME: service_name, SERVICE_VERSION: service_version})

        readers = []
        if self._settings.observability.console_exporter_enabled:
            readers.append(
                PeriodicExportingMetricReader(ConsoleMetricExporter(out=sys.stderr), export_interval_millis=60000)
            )

        self._meter_provider = MeterProvider(resource=resource, metric_readers=readers)
        metrics.set_meter_provider(self._meter_provider)

        self._meter = metrics.get_meter("cqsres", service_version)

        self._component_counter = self._meter.create_counter(
            name="components_built_total",
            description="Total number of validated component reports",
            unit="1",
        )

        self._component_histogram = self._meter.create_histogram(
            name="component_build_duration_seconds",
            description="Time to build and validate one component",
            unit="s",
        )

        self._antiflip_counter = self._meter.create_counter(
            name="antiflips_total",
            description="Total number of antiflips applied",
            unit="1",
        )

        self._sweep_pair_counter = self._meter.create_counter(
            name="sweep_pairs_total",
            description="Total number of (delta, omega) pairs checked by sweeps",
            unit="1",
        )

        self._error_counter = self._meter.create_counter(
            name="errors_total",
            description="Total number of errors encountered",
            unit="1",
        )

    def shutdown(self) -> None:
        """Shutdown telemetry providers."""
        if self._tracer_provider:
            self._tracer_provider.shutdown()
        if self._meter_provider:
            self._meter_provider.shutdown()
