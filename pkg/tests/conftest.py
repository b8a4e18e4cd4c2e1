"""Pytest configuration and shared fixtures."""

from pathlib import Path
from typing import Callable
from unittest.mock import Mock

import pytest

from config import Settings
from src.cfrac import CqsFraction
from src.chain import WahlResolution, chain_string, contract_string, parse_chain
from src.observability.telemetry_service import TelemetryService

GOLDEN_DIR = Path(__file__).parent / "golden"


@pytest.fixture
def mock_settings() -> Settings:
    """Settings with telemetry left disabled."""
    return Settings()


@pytest.fixture
def mock_telemetry_service(mock_settings: Settings) -> TelemetryService:
    """Create a mock telemetry service for testing."""
    service = TelemetryService(mock_settings)
    # Mock the initialization to avoid actual telemetry setup
    service.initialize = Mock()
    service.start_activity = Mock(return_value=None)
    service.record_component_build = Mock()
    service.record_antiflip = Mock()
    service.record_sweep_pair = Mock()
    service.record_error = Mock()
    return service


@pytest.fixture
def f_19_7() -> CqsFraction:
    return CqsFraction(19, 7)


@pytest.fixture
def make_resolution() -> Callable[[str], WahlResolution]:
    """Build a resolution from chain text, taking the target from its contraction."""

    def build(text: str) -> WahlResolution:
        parts = parse_chain(text)
        target = contract_string(chain_string(parts.sings, parts.curves))
        return WahlResolution.build(target, parts.sings, parts.curves)

    return build


@pytest.fixture
def golden_dir() -> Path:
    return GOLDEN_DIR
